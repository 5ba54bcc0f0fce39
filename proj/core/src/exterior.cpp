#include "foliage/exterior.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace foliage {

namespace {

// Sorts idx in place by bubble passes; returns the permutation sign, or 0 on a repeat.
int sort_with_sign(FormIndex& idx) {
  int sign = 1;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j + 1 < idx.size() - i; ++j) {
      if (idx[j] > idx[j + 1]) {
        std::swap(idx[j], idx[j + 1]);
        sign = -sign;
      } else if (idx[j] == idx[j + 1]) {
        return 0;
      }
    }
  }
  for (std::size_t j = 0; j + 1 < idx.size(); ++j) {
    if (idx[j] == idx[j + 1]) {
      return 0;
    }
  }
  return sign;
}

void check_same(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": variable-count mismatch (" + std::to_string(a) + " vs " +
                                std::to_string(b) + ")");
  }
}

}  // namespace

PForm::PForm(std::size_t nvars, std::size_t formdeg) : nvars_(nvars), formdeg_(formdeg) {
  if (nvars == 0 || nvars > kMaxVars) {
    throw std::invalid_argument("form variable count out of range");
  }
  if (formdeg > nvars) {
    throw std::invalid_argument("form degree exceeds the dimension");
  }
}

PForm PForm::function(const Poly& f) {
  PForm out(f.nvars(), 0);
  out.add_term({}, f);
  return out;
}

PForm PForm::term(std::size_t nvars, FormIndex idx, const Poly& coeff) {
  PForm out(nvars, idx.size());
  out.add_term(std::move(idx), coeff);
  return out;
}

PForm PForm::dx(std::size_t nvars, std::size_t var) {
  return term(nvars, {var}, Poly::constant(nvars, Rational(1)));
}

PForm PForm::volume(std::size_t nvars) {
  FormIndex all(nvars);
  for (std::size_t i = 0; i < nvars; ++i) {
    all[i] = i;
  }
  return term(nvars, all, Poly::constant(nvars, Rational(1)));
}

Poly PForm::coeff(const FormIndex& idx) const {
  auto it = comps_.find(idx);
  return it == comps_.end() ? Poly(nvars_) : it->second;
}

void PForm::add_term(FormIndex idx, const Poly& coeff) {
  check_same(nvars_, coeff.nvars(), "add_term");
  if (idx.size() != formdeg_) {
    throw std::invalid_argument("add_term: index length " + std::to_string(idx.size()) + " does not match form degree " +
                                std::to_string(formdeg_));
  }
  for (std::size_t i : idx) {
    if (i >= nvars_) {
      throw std::out_of_range("add_term: differential index out of range");
    }
  }
  const int sign = sort_with_sign(idx);
  if (sign == 0 || coeff.is_zero()) {
    return;
  }
  auto it = comps_.find(idx);
  if (it == comps_.end()) {
    comps_.emplace(std::move(idx), sign > 0 ? coeff : -coeff);
    return;
  }
  if (sign > 0) {
    it->second += coeff;
  } else {
    it->second -= coeff;
  }
  if (it->second.is_zero()) {
    comps_.erase(it);
  }
}

PForm& PForm::operator+=(const PForm& other) {
  check_same(nvars_, other.nvars_, "form sum");
  if (formdeg_ != other.formdeg_) {
    throw std::invalid_argument("form sum: degree mismatch");
  }
  for (const auto& [idx, p] : other.comps_) {
    add_term(idx, p);
  }
  return *this;
}

PForm& PForm::operator-=(const PForm& other) {
  check_same(nvars_, other.nvars_, "form difference");
  if (formdeg_ != other.formdeg_) {
    throw std::invalid_argument("form difference: degree mismatch");
  }
  for (const auto& [idx, p] : other.comps_) {
    add_term(idx, -p);
  }
  return *this;
}

PForm operator-(PForm a) {
  for (auto& [idx, p] : a.comps_) {
    p = -p;
  }
  return a;
}

PForm operator*(const Poly& f, const PForm& a) {
  check_same(f.nvars(), a.nvars_, "function times form");
  return a.map_coefficients([&](const Poly& p) { return f * p; }, a.nvars_);
}

PForm operator*(const Rational& c, const PForm& a) {
  return a.map_coefficients([&](const Poly& p) { return p * c; }, a.nvars_);
}

std::optional<HomogeneousDegree> PForm::coefficient_degree() const {
  std::optional<unsigned> common;
  for (const auto& [idx, p] : comps_) {
    auto d = homogeneous_degree(p);
    if (!d) {
      return std::nullopt;
    }
    const unsigned deg = std::get<unsigned>(*d);
    if (common && *common != deg) {
      return std::nullopt;
    }
    common = deg;
  }
  if (!common) {
    return HomogeneousDegree{AnyDegree{}};
  }
  return HomogeneousDegree{*common};
}

PVec::PVec(std::size_t nvars) : comps_(nvars, Poly(nvars)) {
  if (nvars == 0 || nvars > kMaxVars) {
    throw std::invalid_argument("vector field variable count out of range");
  }
}

PVec::PVec(std::vector<Poly> comps) : comps_(std::move(comps)) {
  if (comps_.empty() || comps_.size() > kMaxVars) {
    throw std::invalid_argument("vector field variable count out of range");
  }
  for (const Poly& p : comps_) {
    if (p.nvars() != comps_.size()) {
      throw std::invalid_argument("vector field: component count must equal variable count");
    }
  }
}

PVec PVec::radial(std::size_t nvars) {
  std::vector<Poly> c;
  for (std::size_t i = 0; i < nvars; ++i) {
    c.push_back(Poly::variable(nvars, i));
  }
  return PVec(std::move(c));
}

PVec PVec::coordinate(std::size_t nvars, std::size_t var) {
  if (var >= nvars) {
    throw std::out_of_range("coordinate field index out of range");
  }
  PVec v(nvars);
  v.comps_[var] = Poly::constant(nvars, Rational(1));
  return v;
}

PVec PVec::constant(std::span<const Rational> v) {
  std::vector<Poly> c;
  for (const Rational& x : v) {
    c.push_back(Poly::constant(v.size(), x));
  }
  return PVec(std::move(c));
}

bool PVec::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const Poly& p) { return p.is_zero(); });
}

PVec& PVec::operator+=(const PVec& other) {
  check_same(nvars(), other.nvars(), "vector field sum");
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    comps_[i] += other.comps_[i];
  }
  return *this;
}

PVec& PVec::operator-=(const PVec& other) {
  check_same(nvars(), other.nvars(), "vector field difference");
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    comps_[i] -= other.comps_[i];
  }
  return *this;
}

PVec operator*(const Poly& f, const PVec& v) {
  check_same(f.nvars(), v.nvars(), "function times vector field");
  PVec out = v;
  for (auto& c : out.comps_) {
    c = f * c;
  }
  return out;
}

PVec operator*(const Rational& c, const PVec& v) {
  PVec out = v;
  for (auto& p : out.comps_) {
    p *= c;
  }
  return out;
}

PForm wedge(const PForm& a, const PForm& b) {
  check_same(a.nvars(), b.nvars(), "wedge");
  const std::size_t deg = a.degree() + b.degree();
  if (deg > a.nvars()) {
    // The zero form of that degree does not exist as a PForm; callers get
    // the zero top-degree form instead.
    return PForm(a.nvars(), a.nvars());
  }
  PForm out(a.nvars(), deg);
  for (const auto& [ia, pa] : a.components()) {
    for (const auto& [ib, pb] : b.components()) {
      FormIndex joined = ia;
      joined.insert(joined.end(), ib.begin(), ib.end());
      if (sort_with_sign(joined) == 0) {
        continue;
      }
      FormIndex raw = ia;
      raw.insert(raw.end(), ib.begin(), ib.end());
      out.add_term(std::move(raw), pa * pb);
    }
  }
  return out;
}

PForm exterior_derivative(const PForm& a) {
  if (a.degree() == a.nvars()) {
    return PForm(a.nvars(), a.nvars());
  }
  PForm out(a.nvars(), a.degree() + 1);
  for (const auto& [idx, p] : a.components()) {
    for (std::size_t j = 0; j < a.nvars(); ++j) {
      if (std::binary_search(idx.begin(), idx.end(), j) || p.degree_in(j) == 0) {
        continue;
      }
      FormIndex raw{j};
      raw.insert(raw.end(), idx.begin(), idx.end());
      out.add_term(std::move(raw), partial(p, j));
    }
  }
  return out;
}

PForm interior_product(const PVec& v, const PForm& a) {
  check_same(v.nvars(), a.nvars(), "interior product");
  if (a.degree() == 0) {
    throw std::invalid_argument("interior product of a 0-form");
  }
  PForm out(a.nvars(), a.degree() - 1);
  for (const auto& [idx, p] : a.components()) {
    for (std::size_t s = 0; s < idx.size(); ++s) {
      const Poly& vs = v[idx[s]];
      if (vs.is_zero()) {
        continue;
      }
      FormIndex rest = idx;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(s));
      const Poly c = vs * p;
      out.add_term(std::move(rest), s % 2 == 0 ? c : -c);
    }
  }
  return out;
}

PForm lie_derivative(const PVec& v, const PForm& a) {
  check_same(v.nvars(), a.nvars(), "Lie derivative");
  if (a.degree() == 0) {
    return exterior_derivative(a).is_zero() ? PForm(a.nvars(), 0) : interior_product(v, exterior_derivative(a));
  }
  PForm first = a.degree() == a.nvars() ? PForm(a.nvars(), a.degree()) : interior_product(v, exterior_derivative(a));
  return first + exterior_derivative(interior_product(v, a));
}

Poly directional_derivative(const PVec& v, const Poly& f) {
  check_same(v.nvars(), f.nvars(), "directional derivative");
  Poly out(f.nvars());
  for (std::size_t i = 0; i < v.nvars(); ++i) {
    if (v[i].is_zero() || f.degree_in(i) == 0) {
      continue;
    }
    out += v[i] * partial(f, i);
  }
  return out;
}

PVec lie_bracket(const PVec& v, const PVec& w) {
  check_same(v.nvars(), w.nvars(), "Lie bracket");
  std::vector<Poly> c;
  c.reserve(v.nvars());
  for (std::size_t i = 0; i < v.nvars(); ++i) {
    c.push_back(directional_derivative(v, w[i]) - directional_derivative(w, v[i]));
  }
  return PVec(std::move(c));
}

PForm pullback(std::span<const Poly> map, const PForm& a) {
  if (map.size() != a.nvars()) {
    throw std::invalid_argument("pullback: map has " + std::to_string(map.size()) + " components, form lives on " +
                                std::to_string(a.nvars()) + " variables");
  }
  const std::size_t source = map.front().nvars();
  for (const Poly& f : map) {
    check_same(f.nvars(), source, "pullback");
  }
  std::vector<PForm> differentials;
  differentials.reserve(map.size());
  for (const Poly& f : map) {
    differentials.push_back(exterior_derivative(PForm::function(f)));
  }
  if (a.degree() > source) {
    return PForm(source, source);
  }
  PForm out(source, a.degree());
  std::map<FormIndex, PForm> wedge_cache;
  for (const auto& [idx, p] : a.components()) {
    auto it = wedge_cache.find(idx);
    if (it == wedge_cache.end()) {
      PForm acc = PForm::function(Poly::constant(source, Rational(1)));
      for (std::size_t i : idx) {
        acc = wedge(acc, differentials[i]);
      }
      it = wedge_cache.emplace(idx, std::move(acc)).first;
    }
    if (it->second.is_zero()) {
      continue;
    }
    out += compose(p, map) * it->second;
  }
  return out;
}

PVec rotational(const PForm& a) {
  const std::size_t n = a.nvars();
  if (n < 2 || a.degree() != n - 2) {
    throw std::invalid_argument("rotational: form degree must be N-2 (got " + std::to_string(a.degree()) + " with N=" +
                                std::to_string(n) + ")");
  }
  const PForm da = exterior_derivative(a);
  std::vector<Poly> z;
  z.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    FormIndex rest;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != s) {
        rest.push_back(i);
      }
    }
    const Poly c = da.coeff(rest);
    z.push_back(s % 2 == 0 ? c : -c);
  }
  PVec result(std::move(z));
  if (!(interior_product(result, PForm::volume(n)) == da)) {
    throw std::logic_error("rotational: reconstruction check failed");
  }
  return result;
}

Jet jet_at(const PForm& a, std::span<const Rational> point, unsigned order) {
  if (point.size() != a.nvars()) {
    throw std::invalid_argument("jet_at: point length mismatch");
  }
  Jet jet;
  jet.base.assign(point.begin(), point.end());
  jet.order = order;
  jet.body = a.map_coefficients([&](const Poly& p) { return truncate(translate(p, point), order); }, a.nvars());
  return jet;
}

PForm homogeneous_part(const Jet& jet, unsigned degree) {
  if (degree > jet.order) {
    throw std::invalid_argument("homogeneous_part: degree " + std::to_string(degree) + " exceeds jet order " +
                                std::to_string(jet.order));
  }
  return jet.body.map_coefficients([&](const Poly& p) { return homogeneous_slice(p, degree); }, jet.body.nvars());
}

PForm evaluate_at(const PForm& a, std::span<const Rational> point) {
  return a.map_coefficients([&](const Poly& p) { return Poly::constant(a.nvars(), eval(p, point)); }, a.nvars());
}

PVec evaluate_at(const PVec& v, std::span<const Rational> point) {
  std::vector<Rational> values;
  for (const Poly& p : v.comps()) {
    values.push_back(eval(p, point));
  }
  return PVec::constant(values);
}

PForm translate_form(const PForm& a, std::span<const Rational> shift) {
  std::vector<Rational> back;
  for (const Rational& s : shift) {
    back.push_back(-s);
  }
  return a.map_coefficients([&](const Poly& p) { return translate(p, back); }, a.nvars());
}

PForm contract_multivector(const FormIndex& j, const PForm& a) {
  PForm out = a;
  for (std::size_t idx : j) {
    out = interior_product(PVec::coordinate(a.nvars(), idx), out);
  }
  return out;
}

std::vector<FormIndex> index_subsets(std::size_t n, std::size_t k) {
  std::vector<FormIndex> out;
  if (k > n) {
    return out;
  }
  FormIndex idx(k);
  for (std::size_t i = 0; i < k; ++i) {
    idx[i] = i;
  }
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) {
      --i;
    }
    if (i == 0) {
      return out;
    }
    ++idx[i - 1];
    for (std::size_t m = i; m < k; ++m) {
      idx[m] = idx[m - 1] + 1;
    }
  }
}

}  // namespace foliage
