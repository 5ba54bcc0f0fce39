#include "foliage/foliation.hpp"

#include <random>
#include <stdexcept>

#include "foliage/gcd.hpp"
#include "foliage/linalg.hpp"
#include "foliage/modform.hpp"

namespace foliage {

namespace {

std::vector<std::uint64_t> random_point(std::size_t n, const ModField& field, std::mt19937_64& rng) {
  std::vector<std::uint64_t> pt(n);
  for (auto& c : pt) {
    c = field.uniform(rng);
  }
  return pt;
}

unsigned coefficient_degree(const PForm& a, const char* what) {
  auto deg = a.coefficient_degree();
  if (!deg) {
    throw std::invalid_argument(std::string(what) + ": coefficients are not homogeneous of a common degree");
  }
  if (std::holds_alternative<AnyDegree>(*deg)) {
    return 0;
  }
  return std::get<unsigned>(*deg);
}

// Distinct per-check streams so results do not depend on evaluation order.
std::mt19937_64 rng_for(const CheckMode& mode, std::uint64_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(mode.seed), static_cast<std::uint32_t>(mode.seed >> 32),
                    static_cast<std::uint32_t>(salt)};
  return std::mt19937_64(seq);
}

}  // namespace

Foliation1D make_foliation_1d(PVec X) {
  const std::size_t n = X.nvars();
  if (n < 2) {
    throw std::invalid_argument("a foliation by curves needs at least 2 homogeneous variables");
  }
  std::optional<unsigned> d;
  for (std::size_t i = 0; i < n; ++i) {
    auto deg = homogeneous_degree(X[i]);
    if (!deg) {
      throw std::invalid_argument("component " + std::to_string(i) + " of X is not homogeneous");
    }
    if (std::holds_alternative<unsigned>(*deg)) {
      if (d && *d != std::get<unsigned>(*deg)) {
        throw std::invalid_argument("components of X have different degrees");
      }
      d = std::get<unsigned>(*deg);
    }
  }
  if (!d) {
    throw std::invalid_argument("X is the zero vector field");
  }
  bool tangent_to_radial = true;
  for (std::size_t a = 0; a < n && tangent_to_radial; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const Poly minor = Poly::variable(n, a) * X[b] - Poly::variable(n, b) * X[a];
      if (!minor.is_zero()) {
        tangent_to_radial = false;
        break;
      }
    }
  }
  if (tangent_to_radial) {
    throw std::invalid_argument("X is a multiple of the radial field and defines no foliation");
  }
  return Foliation1D{n - 1, *d, std::move(X)};
}

FoliationQ make_foliation_q(PForm eta, bool check_integrable) {
  if (eta.is_zero()) {
    throw std::invalid_argument("the zero form defines no foliation");
  }
  const unsigned k = coefficient_degree(eta, "foliation");
  if (k == 0) {
    throw std::invalid_argument("a homogeneous foliation form needs coefficients of degree at least 1");
  }
  if (!radial_check(eta)) {
    throw std::invalid_argument("the form is not annihilated by the radial field");
  }
  if (check_integrable && !is_integrable(eta)) {
    throw std::invalid_argument("the form is not integrable");
  }
  FoliationQ out;
  out.n = eta.nvars() - 1;
  out.q = eta.degree();
  out.theta = k - 1;
  out.removed_factor = Poly::constant(eta.nvars(), Rational(1));
  out.eta = std::move(eta);
  return out;
}

PForm omega_from_1d(const Foliation1D& g) {
  const std::size_t n = g.m + 1;
  return interior_product(PVec::radial(n), interior_product(g.X, PForm::volume(n)));
}

FoliationQ pullback_foliation(const RationalMap& f, const Foliation1D& g) {
  if (f.m != g.m) {
    throw std::invalid_argument("map target dimension " + std::to_string(f.m) + " differs from foliation ambient " +
                                std::to_string(g.m));
  }
  if (auto err = validation_error(f)) {
    throw std::invalid_argument("invalid rational map: " + *err);
  }
  PForm eta = pullback(f.comps, omega_from_1d(g));
  if (eta.is_zero()) {
    throw std::invalid_argument("the pull-back vanishes identically (degenerate pair)");
  }
  std::vector<Poly> coeffs;
  for (const auto& [idx, p] : eta.components()) {
    coeffs.push_back(p);
  }
  const Poly common = gcd_all(coeffs);
  FoliationQ out;
  out.n = f.n;
  out.q = eta.degree();
  out.removed_factor = Poly::constant(eta.nvars(), Rational(1));
  if (!common.is_constant()) {
    eta = eta.map_coefficients([&](const Poly& p) { return *divide_exact(p, common); }, eta.nvars());
    out.removed_factor = common;
    out.removed_degree = *common.total_degree();
  }
  out.theta = degree_of(eta);
  out.eta = std::move(eta);
  return out;
}

PForm pullback_form_by_expansion(const RationalMap& f, const Foliation1D& g) {
  if (f.m != g.m || f.comps.size() != g.m + 1) {
    throw std::invalid_argument("pullback_form_by_expansion: arity mismatch");
  }
  const std::size_t src = f.n + 1;
  const std::size_t tgt = g.m + 1;
  std::vector<Poly> composed;
  std::vector<PForm> dF;
  for (std::size_t i = 0; i < tgt; ++i) {
    composed.push_back(compose(g.X[i], f.comps));
    dF.push_back(exterior_derivative(PForm::function(f.comps[i])));
  }
  PForm out(src, tgt - 2);
  for (std::size_t a = 0; a < tgt; ++a) {
    for (std::size_t b = a + 1; b < tgt; ++b) {
      Poly c = f.comps[a] * composed[b] - f.comps[b] * composed[a];
      if ((a + b) % 2 == 1) {
        c = -c;
      }
      PForm w = PForm::function(Poly::constant(src, Rational(1)));
      for (std::size_t i = 0; i < tgt; ++i) {
        if (i != a && i != b) {
          w = wedge(w, dF[i]);
        }
      }
      out += c * w;
    }
  }
  return out;
}

unsigned degree_of(const PForm& a) {
  if (a.is_zero()) {
    throw std::invalid_argument("degree_of: zero form");
  }
  const unsigned k = coefficient_degree(a, "degree_of");
  if (k == 0) {
    throw std::invalid_argument("degree_of: constant coefficients");
  }
  return k - 1;
}

bool radial_check(const PForm& a, const CheckMode& mode) {
  if (a.degree() == 0) {
    return a.is_zero();
  }
  if (!mode.probabilistic) {
    return interior_product(PVec::radial(a.nvars()), a).is_zero();
  }
  const ModField field(mode.prime);
  auto rng = rng_for(mode, 1);
  for (unsigned t = 0; t < mode.trials; ++t) {
    const auto pt = random_point(a.nvars(), field, rng);
    if (!interior_mod(pt, evaluate_mod(a, pt, field), field).is_zero()) {
      return false;
    }
  }
  return true;
}

bool euler_relation_check(const PForm& a, const CheckMode& mode) {
  const unsigned k = coefficient_degree(a, "euler_relation_check");
  const Rational factor(k + a.degree());
  const PForm da = exterior_derivative(a);
  if (a.degree() == a.nvars()) {
    return a.is_zero();
  }
  if (!mode.probabilistic) {
    return interior_product(PVec::radial(a.nvars()), da) == factor * a;
  }
  const ModField field(mode.prime);
  auto rng = rng_for(mode, 2);
  for (unsigned t = 0; t < mode.trials; ++t) {
    const auto pt = random_point(a.nvars(), field, rng);
    const ModForm lhs = interior_mod(pt, evaluate_mod(da, pt, field), field);
    const ModForm rhs = scale_mod(field.reduce(factor), evaluate_mod(a, pt, field), field);
    if (!(lhs == rhs)) {
      return false;
    }
  }
  return true;
}

namespace {

bool plucker_frobenius(const PForm& a, bool frobenius, const CheckMode& mode) {
  if (a.degree() == 0 || a.is_zero()) {
    return true;
  }
  const auto multivectors = index_subsets(a.nvars(), a.degree() - 1);
  const PForm da = frobenius ? exterior_derivative(a) : PForm(a.nvars(), 0);
  if (!mode.probabilistic) {
    for (const FormIndex& j : multivectors) {
      const PForm c = contract_multivector(j, a);
      if (c.is_zero()) {
        continue;
      }
      if (!wedge(c, a).is_zero()) {
        return false;
      }
      if (frobenius && a.degree() < a.nvars() && !wedge(c, da).is_zero()) {
        return false;
      }
    }
    return true;
  }
  const ModField field(mode.prime);
  auto rng = rng_for(mode, frobenius ? 4 : 3);
  for (unsigned t = 0; t < mode.trials; ++t) {
    const auto pt = random_point(a.nvars(), field, rng);
    const ModForm av = evaluate_mod(a, pt, field);
    const ModForm dav = evaluate_mod(da, pt, field);
    for (const FormIndex& j : multivectors) {
      const ModForm c = contract_multivector_mod(j, av, field);
      if (!wedge_mod(c, av, field).is_zero()) {
        return false;
      }
      if (frobenius && a.degree() < a.nvars() && !wedge_mod(c, dav, field).is_zero()) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_decomposable_everywhere(const PForm& a, const CheckMode& mode) { return plucker_frobenius(a, false, mode); }

bool is_integrable(const PForm& a, const CheckMode& mode) { return plucker_frobenius(a, true, mode); }

std::vector<std::vector<Rational>> kernel_at(const PForm& a, const Point& p) {
  const PForm value = evaluate_at(a, p);
  if (value.is_zero()) {
    throw std::domain_error("kernel_at: the form vanishes at the point");
  }
  const std::size_t n = a.nvars();
  if (a.degree() == 0) {
    std::vector<std::vector<Rational>> all;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rational> e(n, Rational(0));
      e[i] = 1;
      all.push_back(std::move(e));
    }
    return all;
  }
  const auto keys = index_subsets(n, a.degree() - 1);
  Matrix m(keys.size(), n);
  for (std::size_t j = 0; j < n; ++j) {
    const PForm c = interior_product(PVec::coordinate(n, j), value);
    for (std::size_t r = 0; r < keys.size(); ++r) {
      m(r, j) = c.coeff(keys[r]).constant_term();
    }
  }
  return nullspace(m);
}

}  // namespace foliage
