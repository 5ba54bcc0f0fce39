#include "foliage/poly.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace foliage {

Monomial Monomial::variable(std::size_t var, unsigned power) {
  Monomial m;
  m.set(var, power);
  return m;
}

void Monomial::set(std::size_t var, unsigned power) {
  if (var >= kMaxVars) {
    throw std::out_of_range("variable index " + std::to_string(var) + " exceeds supported range");
  }
  if (power > std::numeric_limits<std::uint16_t>::max()) {
    throw std::overflow_error("exponent too large");
  }
  degree_ = degree_ - exp_[var] + power;
  exp_[var] = static_cast<std::uint16_t>(power);
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const unsigned e = unsigned{exp_[i]} + other.exp_[i];
    if (e > std::numeric_limits<std::uint16_t>::max()) {
      throw std::overflow_error("exponent too large");
    }
    r.exp_[i] = static_cast<std::uint16_t>(e);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) {
    return false;
  }
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp_[i] > other.exp_[i]) {
      return false;
    }
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp_[i] = static_cast<std::uint16_t>(exp_[i] - divisor.exp_[i]);
  }
  r.degree_ = degree_ - divisor.degree_;
  return r;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) {
    return a.degree() > b.degree();
  }
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a[i] != b[i]) {
      return a[i] > b[i];
    }
  }
  return false;
}

namespace {

void check_nvars(std::size_t nvars) {
  if (nvars == 0 || nvars > kMaxVars) {
    throw std::invalid_argument("variable count must be in [1, " + std::to_string(kMaxVars) + "]");
  }
}

void check_same(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars()) {
    throw std::invalid_argument("variable-count mismatch: " + std::to_string(a.nvars()) + " vs " +
                                std::to_string(b.nvars()));
  }
}

void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return grlex_greater(x.mono, y.mono); });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational sum = terms[i].coeff;
    while (j < terms.size() && terms[j].mono == terms[i].mono) {
      sum += terms[j].coeff;
      ++j;
    }
    if (!is_zero(sum)) {
      terms[out].mono = terms[i].mono;
      terms[out].coeff = std::move(sum);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

// Merge of two sorted term lists, b scaled by c and shifted by m.
std::vector<Term> merge(std::span<const Term> a, std::span<const Term> b, const Rational& c,
                        const Monomial& m) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    const Monomial bm = b[j].mono * m;
    if (i == a.size() || grlex_greater(bm, a[i].mono)) {
      out.push_back({bm, b[j].coeff * c});
      ++j;
    } else if (a[i].mono == bm) {
      Rational s = a[i].coeff + b[j].coeff * c;
      if (!is_zero(s)) {
        out.push_back({bm, std::move(s)});
      }
      ++i;
      ++j;
    } else {
      out.push_back(a[i++]);
    }
  }
  return out;
}

}  // namespace

Poly::Poly(std::size_t nvars) : nvars_(nvars) { check_nvars(nvars); }

Poly::Poly(std::size_t nvars, std::vector<Term> terms) : nvars_(nvars), terms_(std::move(terms)) {
  check_nvars(nvars);
  for (const Term& t : terms_) {
    for (std::size_t i = nvars; i < kMaxVars; ++i) {
      if (t.mono[i] != 0) {
        throw std::invalid_argument("monomial uses variable x" + std::to_string(i) + " outside the ring");
      }
    }
  }
  canonicalize(terms_);
}

Poly::Poly(Presorted, std::size_t nvars, std::vector<Term> terms)
    : nvars_(nvars), terms_(std::move(terms)) {}

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  return monomial(nvars, Monomial{}, c);
}

Poly Poly::variable(std::size_t nvars, std::size_t var) {
  if (var >= nvars) {
    throw std::out_of_range("variable index out of range");
  }
  return monomial(nvars, Monomial::variable(var), Rational(1));
}

Poly Poly::monomial(std::size_t nvars, const Monomial& mono, const Rational& c) {
  std::vector<Term> t;
  if (!foliage::is_zero(c)) {
    t.push_back({mono, c});
  }
  return Poly(nvars, std::move(t));
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree() == 0);
}

const Term& Poly::leading_term() const {
  if (terms_.empty()) {
    throw std::domain_error("leading term of the zero polynomial");
  }
  return terms_.front();
}

Rational Poly::coeff(const Monomial& mono) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), mono,
                             [](const Term& t, const Monomial& m) { return grlex_greater(t.mono, m); });
  if (it != terms_.end() && it->mono == mono) {
    return it->coeff;
  }
  return Rational(0);
}

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.degree() == 0) {
    return terms_.back().coeff;
  }
  return Rational(0);
}

std::optional<unsigned> Poly::total_degree() const {
  if (terms_.empty()) {
    return std::nullopt;
  }
  return terms_.front().mono.degree();
}

unsigned Poly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const Term& t : terms_) {
    d = std::max(d, t.mono[var]);
  }
  return d;
}

Poly& Poly::operator+=(const Poly& other) {
  check_same(*this, other);
  terms_ = merge(terms_, other.terms_, Rational(1), Monomial{});
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  check_same(*this, other);
  terms_ = merge(terms_, other.terms_, Rational(-1), Monomial{});
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (foliage::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (Term& t : terms_) {
    t.coeff *= c;
  }
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  check_same(a, b);
  if (a.is_zero() || b.is_zero()) {
    return Poly(a.nvars());
  }
  const Poly& small = a.size() <= b.size() ? a : b;
  const Poly& large = a.size() <= b.size() ? b : a;
  if (small.size() == 1) {
    return add_scaled(Poly(a.nvars()), large, small.terms_[0].coeff, small.terms_[0].mono);
  }
  std::vector<Term> prod;
  prod.reserve(a.size() * b.size());
  for (const Term& x : small.terms_) {
    for (const Term& y : large.terms_) {
      prod.push_back({x.mono * y.mono, x.coeff * y.coeff});
    }
  }
  canonicalize(prod);
  return Poly(Poly::Presorted{}, a.nvars(), std::move(prod));
}

Poly operator-(Poly a) {
  for (Term& t : a.terms_) {
    t.coeff = -t.coeff;
  }
  return a;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

Poly add_scaled(const Poly& a, const Poly& b, const Rational& c, const Monomial& m) {
  check_same(a, b);
  if (is_zero(c)) {
    return a;
  }
  return Poly(Poly::Presorted{}, a.nvars_, merge(a.terms_, b.terms_, c, m));
}

Poly add(const Poly& a, const Poly& b) { return a + b; }
Poly mul(const Poly& a, const Poly& b) { return a * b; }
Poly neg(const Poly& a) { return -a; }
Poly scale(const Poly& a, const Rational& c) { return a * c; }

Poly pow(const Poly& p, unsigned exponent) {
  Poly result = Poly::constant(p.nvars(), Rational(1));
  Poly base = p;
  while (exponent > 0) {
    if (exponent & 1U) {
      result *= base;
    }
    exponent >>= 1U;
    if (exponent > 0) {
      base *= base;
    }
  }
  return result;
}

Poly partial(const Poly& p, std::size_t var) {
  if (var >= p.nvars()) {
    throw std::out_of_range("partial: variable index " + std::to_string(var) + " out of range");
  }
  std::vector<Term> out;
  out.reserve(p.size());
  for (const Term& t : p.terms()) {
    const unsigned e = t.mono[var];
    if (e == 0) {
      continue;
    }
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back({m, t.coeff * e});
  }
  return Poly(p.nvars(), std::move(out));
}

Rational eval(const Poly& p, std::span<const Rational> point) {
  if (point.size() != p.nvars()) {
    throw std::invalid_argument("eval: point has " + std::to_string(point.size()) + " coordinates, expected " +
                                std::to_string(p.nvars()));
  }
  std::vector<std::vector<Rational>> powers(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    powers[i].push_back(Rational(1));
    const unsigned top = p.degree_in(i);
    for (unsigned e = 1; e <= top; ++e) {
      powers[i].push_back(powers[i].back() * point[i]);
    }
  }
  Rational sum = 0;
  for (const Term& t : p.terms()) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      if (t.mono[i] != 0) {
        v *= powers[i][t.mono[i]];
      }
    }
    sum += v;
  }
  return sum;
}

std::optional<HomogeneousDegree> homogeneous_degree(const Poly& p) {
  if (p.is_zero()) {
    return HomogeneousDegree{AnyDegree{}};
  }
  const unsigned d = p.terms().front().mono.degree();
  for (const Term& t : p.terms()) {
    if (t.mono.degree() != d) {
      return std::nullopt;
    }
  }
  return HomogeneousDegree{d};
}

Poly compose(const Poly& p, std::span<const Poly> subs) {
  if (subs.size() != p.nvars()) {
    throw std::invalid_argument("compose: expected " + std::to_string(p.nvars()) + " substitutes, got " +
                                std::to_string(subs.size()));
  }
  const std::size_t target = subs.front().nvars();
  for (const Poly& s : subs) {
    if (s.nvars() != target) {
      throw std::invalid_argument("compose: substitutes live in different rings");
    }
  }
  std::vector<std::vector<Poly>> powers(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    powers[i].push_back(Poly::constant(target, Rational(1)));
    const unsigned top = p.degree_in(i);
    for (unsigned e = 1; e <= top; ++e) {
      powers[i].push_back(powers[i].back() * subs[i]);
    }
  }
  std::vector<Term> acc;
  for (const Term& t : p.terms()) {
    Poly v = Poly::constant(target, t.coeff);
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      if (t.mono[i] != 0) {
        v *= powers[i][t.mono[i]];
      }
    }
    acc.insert(acc.end(), v.terms().begin(), v.terms().end());
  }
  return Poly(target, std::move(acc));
}

Poly translate(const Poly& p, std::span<const Rational> shift) {
  if (shift.size() != p.nvars()) {
    throw std::invalid_argument("translate: point length mismatch");
  }
  std::vector<Poly> subs;
  subs.reserve(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    subs.push_back(Poly::variable(p.nvars(), i) + Poly::constant(p.nvars(), shift[i]));
  }
  return compose(p, subs);
}

Poly truncate(const Poly& p, unsigned max_degree) {
  std::vector<Term> out;
  for (const Term& t : p.terms()) {
    if (t.mono.degree() <= max_degree) {
      out.push_back(t);
    }
  }
  return Poly(p.nvars(), std::move(out));
}

Poly homogeneous_slice(const Poly& p, unsigned degree) {
  std::vector<Term> out;
  for (const Term& t : p.terms()) {
    if (t.mono.degree() == degree) {
      out.push_back(t);
    }
  }
  return Poly(p.nvars(), std::move(out));
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  check_same(a, b);
  if (b.is_zero()) {
    throw std::domain_error("division by the zero polynomial");
  }
  const Term& lead = b.leading_term();
  const Rational inv = 1 / lead.coeff;
  Poly rem = a;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const Term& lt = rem.leading_term();
    if (!lead.mono.divides(lt.mono)) {
      return std::nullopt;
    }
    Term q{lt.mono / lead.mono, lt.coeff * inv};
    rem = add_scaled(rem, b, -q.coeff, q.mono);
    quotient.push_back(std::move(q));
  }
  return Poly(a.nvars(), std::move(quotient));
}

Poly extend_vars(const Poly& p, std::size_t nvars) {
  if (nvars < p.nvars()) {
    throw std::invalid_argument("extend_vars: cannot shrink the ring");
  }
  return Poly(nvars, std::vector<Term>(p.terms().begin(), p.terms().end()));
}

}  // namespace foliage
