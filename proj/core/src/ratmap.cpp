#include "foliage/ratmap.hpp"

#include <stdexcept>

#include "foliage/gcd.hpp"
#include "foliage/text.hpp"

namespace foliage {

RationalMap make_rational_map(std::vector<Poly> comps) {
  if (comps.empty()) {
    throw std::invalid_argument("rational map needs at least one component");
  }
  RationalMap f;
  f.n = comps.front().nvars() - 1;
  f.m = comps.size() - 1;
  for (const Poly& p : comps) {
    if (p.nvars() != f.n + 1) {
      throw std::invalid_argument("rational map components live in different rings");
    }
    if (auto d = p.total_degree()) {
      f.nu = *d;
      break;
    }
  }
  f.comps = std::move(comps);
  return f;
}

std::optional<std::string> validation_error(const RationalMap& f) {
  if (f.comps.size() != f.m + 1) {
    return "expected " + std::to_string(f.m + 1) + " components, got " + std::to_string(f.comps.size());
  }
  bool all_zero = true;
  for (std::size_t i = 0; i < f.comps.size(); ++i) {
    const Poly& p = f.comps[i];
    if (p.nvars() != f.n + 1) {
      return "component " + std::to_string(i) + " has " + std::to_string(p.nvars()) + " variables, expected " +
             std::to_string(f.n + 1);
    }
    auto d = homogeneous_degree(p);
    if (!d) {
      return "component " + std::to_string(i) + " is not homogeneous";
    }
    if (std::holds_alternative<unsigned>(*d)) {
      all_zero = false;
      if (std::get<unsigned>(*d) != f.nu) {
        return "component " + std::to_string(i) + " has degree " + std::to_string(std::get<unsigned>(*d)) +
               ", expected " + std::to_string(f.nu);
      }
    }
  }
  if (all_zero) {
    return "all components are zero";
  }
  const Poly g = gcd_all(f.comps);
  if (!g.is_constant()) {
    return "components share the common factor " + to_string(g);
  }
  return std::nullopt;
}

bool validate(const RationalMap& f) { return !validation_error(f); }

std::vector<Rational> evaluate(const RationalMap& f, const Point& p) {
  if (p.size() != f.n + 1) {
    throw std::invalid_argument("point has " + std::to_string(p.size()) + " coordinates, map expects " +
                                std::to_string(f.n + 1));
  }
  std::vector<Rational> out;
  out.reserve(f.comps.size());
  for (const Poly& c : f.comps) {
    out.push_back(eval(c, p));
  }
  return out;
}

namespace {

bool is_zero_vector(const std::vector<Rational>& v) {
  for (const Rational& x : v) {
    if (!is_zero(x)) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool is_indeterminacy_point(const RationalMap& f, const Point& p) {
  if (is_zero_vector(p)) {
    throw std::invalid_argument("the zero vector is not a projective point");
  }
  return is_zero_vector(evaluate(f, p));
}

Matrix jacobian_at(const RationalMap& f, const Point& p) {
  if (p.size() != f.n + 1) {
    throw std::invalid_argument("jacobian_at: point length mismatch");
  }
  Matrix j(f.comps.size(), f.n + 1);
  for (std::size_t r = 0; r < f.comps.size(); ++r) {
    for (std::size_t c = 0; c <= f.n; ++c) {
      j(r, c) = eval(partial(f.comps[r], c), p);
    }
  }
  return j;
}

bool is_generic_at(const RationalMap& f, const Point& p) {
  if (!is_indeterminacy_point(f, p)) {
    throw std::invalid_argument("is_generic_at: " + std::string("point is not an indeterminacy point"));
  }
  return rank_bareiss(jacobian_at(f, p)) == f.m + 1;
}

bool projectively_equal(const Point& a, const Point& b) {
  if (a.size() != b.size()) {
    return false;
  }
  if (is_zero_vector(a) || is_zero_vector(b)) {
    throw std::invalid_argument("projectively_equal: zero vector");
  }
  // a ~ b iff all 2x2 minors a_i b_j - a_j b_i vanish.
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a[i] * b[j] != a[j] * b[i]) {
        return false;
      }
    }
  }
  return true;
}

WitnessReport indeterminacy_witness_check(const RationalMap& f, const std::vector<Point>& points) {
  if (f.n != f.m + 1) {
    throw std::invalid_argument("witness check needs n == m+1 (got n=" + std::to_string(f.n) +
                                ", m=" + std::to_string(f.m) + ")");
  }
  WitnessReport report;
  report.bezout_bound = 1;
  for (std::size_t i = 0; i <= f.m; ++i) {
    report.bezout_bound *= f.nu;
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!is_indeterminacy_point(f, points[i])) {
      throw std::invalid_argument("witness " + std::to_string(i) + " is not an indeterminacy point");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (projectively_equal(points[i], points[j])) {
        throw std::invalid_argument("witnesses " + std::to_string(j) + " and " + std::to_string(i) +
                                    " are the same projective point");
      }
    }
    if (!is_generic_at(f, points[i])) {
      report.all_generic = false;
    }
  }
  report.count = points.size();
  report.complete = report.all_generic && report.count == report.bezout_bound;
  if (report.complete) {
    report.status = "complete by Bezout";
  } else {
    report.status = "partial witnesses: " + std::to_string(report.count) + " of " +
                    std::to_string(report.bezout_bound) + " witnessed";
  }
  return report;
}

namespace {

// Rational r with r^k == c, if any.
std::optional<Integer> exact_root(const Integer& z, unsigned k) {
  if (z < 0) {
    if (k % 2 == 0) {
      return std::nullopt;
    }
    auto r = exact_root(Integer(-z), k);
    if (!r) {
      return std::nullopt;
    }
    return Integer(-*r);
  }
  Integer r;
  if (mpz_root(r.get_mpz_t(), z.get_mpz_t(), k) == 0) {
    return std::nullopt;
  }
  return r;
}

std::vector<Rational> rational_roots_of_binomial(const Rational& c, unsigned nu) {
  if (is_zero(c)) {
    return {Rational(0)};
  }
  auto num = exact_root(c.get_num(), nu);
  auto den = exact_root(c.get_den(), nu);
  if (!num || !den) {
    return {};
  }
  const Rational r = normalized(Rational(*num, *den));
  if (nu % 2 == 0) {
    return {r, -r};
  }
  return {r};
}

}  // namespace

std::optional<std::vector<Point>> binomial_family_witnesses(const RationalMap& f) {
  if (f.n != f.m + 1 || f.comps.size() != f.n || f.nu == 0) {
    return std::nullopt;
  }
  const std::size_t nv = f.n + 1;
  std::vector<Rational> consts;
  for (std::size_t i = 1; i <= f.n; ++i) {
    const Poly& p = f.comps[i - 1];
    const Monomial xi = Monomial::variable(i, f.nu);
    const Monomial x0 = Monomial::variable(0, f.nu);
    const Rational a = p.coeff(xi);
    if (is_zero(a) || p.size() > 2) {
      return std::nullopt;
    }
    const Rational b = p.coeff(x0);
    if (p.size() == 2 && is_zero(b)) {
      return std::nullopt;
    }
    consts.push_back(normalized(-b / a));
  }
  std::vector<Point> points{Point{Rational(1)}};
  for (const Rational& c : consts) {
    const auto roots = rational_roots_of_binomial(c, f.nu);
    std::vector<Point> next;
    for (const Point& prefix : points) {
      for (const Rational& r : roots) {
        Point p = prefix;
        p.push_back(r);
        next.push_back(std::move(p));
      }
    }
    points = std::move(next);
  }
  for (const Point& p : points) {
    if (p.size() != nv) {
      throw std::logic_error("binomial witness has the wrong length");
    }
  }
  return points;
}

bool is_critical_point(const RationalMap& f, const Point& p, std::size_t chart) {
  if (chart > f.n) {
    throw std::out_of_range("chart index out of range");
  }
  if (is_zero(p.at(chart))) {
    throw std::invalid_argument("point lies outside the chosen chart");
  }
  const std::vector<Rational> value = evaluate(f, p);
  if (is_zero_vector(value)) {
    throw std::invalid_argument("point lies in the indeterminacy locus");
  }
  std::size_t target = 0;
  while (is_zero(value[target])) {
    ++target;
  }
  // Quotients F_k / F_target in the chart x_chart = 1; Euler's relation makes
  // the derivative along the radial direction irrelevant, so partials in the
  // remaining coordinates at p scaled to p_chart = 1 give the affine Jacobian.
  Point q = p;
  for (Rational& x : q) {
    x /= p[chart];
  }
  const Matrix jac = jacobian_at(f, q);
  const std::vector<Rational> fq = evaluate(f, q);
  Matrix affine(f.m, f.n);
  std::size_t row = 0;
  for (std::size_t k = 0; k <= f.m; ++k) {
    if (k == target) {
      continue;
    }
    std::size_t col = 0;
    for (std::size_t l = 0; l <= f.n; ++l) {
      if (l == chart) {
        continue;
      }
      affine(row, col) = fq[target] * jac(k, l) - fq[k] * jac(target, l);
      ++col;
    }
    ++row;
  }
  return rank_bareiss(affine) + 1 <= f.m;
}

bool fiber_membership(const RationalMap& f, const Point& p, const Point& q) {
  const std::vector<Rational> value = evaluate(f, p);
  if (is_zero_vector(value)) {
    throw std::invalid_argument("point lies in the indeterminacy locus");
  }
  if (q.size() != value.size()) {
    throw std::invalid_argument("target point has " + std::to_string(q.size()) + " coordinates, expected " +
                                std::to_string(value.size()));
  }
  return projectively_equal(value, q);
}

}  // namespace foliage
