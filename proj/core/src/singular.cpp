#include "foliage/singular.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <map>

#include "foliage/gcd.hpp"
#include "foliage/text.hpp"

namespace foliage {

LinearPartInfo linear_part_info(const Matrix& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("linear part must be square");
  }
  LinearPartInfo info;
  info.matrix = a;
  info.trace = trace(a);
  info.determinant = determinant(a);
  info.charpoly = characteristic_polynomial(a);
  info.nilpotent = is_nilpotent(a);
  return info;
}

bool singular_at(const PForm& a, const Point& p) {
  if (p.size() != a.nvars()) {
    throw std::invalid_argument("point has " + std::to_string(p.size()) + " coordinates, form lives on " +
                                std::to_string(a.nvars()) + " variables");
  }
  for (const auto& [idx, c] : a.components()) {
    if (!is_zero(eval(c, p))) {
      return false;
    }
  }
  return true;
}

bool kupka_at(const PForm& a, const Point& p) {
  if (!singular_at(a, p)) {
    return false;
  }
  const PForm da = exterior_derivative(a);
  for (const auto& [idx, c] : da.components()) {
    if (!is_zero(eval(c, p))) {
      return true;
    }
  }
  return false;
}

KupkaFiberReport kupka_on_fiber_check(const PForm& eta, const RationalMap& f, const Point& target,
                                      const std::vector<Point>& points) {
  KupkaFiberReport report;
  if (points.empty()) {
    report.warnings.push_back("no fiber points supplied; the check is vacuous");
    return report;
  }
  for (const Point& p : points) {
    if (is_indeterminacy_point(f, p)) {
      throw std::invalid_argument("fiber point " + to_string(p) + " lies in the indeterminacy locus");
    }
    if (!fiber_membership(f, p, target)) {
      throw std::invalid_argument("point " + to_string(p) + " is not on the fiber over " + to_string(target));
    }
    const bool k = kupka_at(eta, p);
    report.points.push_back({p, k});
    report.pass = report.pass && k;
  }
  return report;
}

namespace {

void require_codim_two(const PForm& a, const char* what) {
  if (a.nvars() < 2 || a.degree() + 2 != a.nvars()) {
    throw std::invalid_argument(std::string(what) + ": form degree must be N-2 (got " + std::to_string(a.degree()) +
                                " on " + std::to_string(a.nvars()) + " variables)");
  }
}

Matrix linear_coefficients(const PVec& z) {
  const std::size_t n = z.nvars();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = z[i].coeff(Monomial::variable(j));
    }
  }
  return m;
}

void monomials_of_degree(std::size_t nvars, unsigned degree, std::vector<Monomial>& out) {
  // Odometer over exponent vectors of the given total degree.
  std::vector<unsigned> e(nvars, 0);
  e[0] = degree;
  while (true) {
    Monomial mono;
    for (std::size_t i = 0; i < nvars; ++i) {
      mono.set(i, e[i]);
    }
    out.push_back(mono);
    std::size_t i = 0;
    while (i + 1 < nvars && e[i] == 0) {
      ++i;
    }
    if (i + 1 >= nvars) {
      return;
    }
    const unsigned carry = e[i];
    e[i] = 0;
    e[0] = carry - 1;
    ++e[i + 1];
  }
}

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_greater(a, b); }
};

std::uint64_t previous_prime(std::uint64_t p) {
  for (std::uint64_t c = p - 2;; c -= 2) {
    if (is_prime_u64(c)) {
      return c;
    }
  }
}

}  // namespace

LinearPartInfo rotational_linear_part(const PForm& a, const Point& p) {
  require_codim_two(a, "rotational_linear_part");
  const Jet jet = jet_at(a, p, 2);
  return linear_part_info(linear_coefficients(rotational(jet.body)));
}

bool has_isolated_zero(const PVec& z, const IsolationOptions& opts, std::string& mode) {
  const std::size_t n = z.nvars();
  std::optional<unsigned> e;
  for (std::size_t i = 0; i < n; ++i) {
    auto deg = homogeneous_degree(z[i]);
    if (!deg) {
      throw std::invalid_argument("has_isolated_zero: components must be homogeneous");
    }
    if (std::holds_alternative<AnyDegree>(*deg)) {
      continue;
    }
    if (e && *e != std::get<unsigned>(*deg)) {
      throw std::invalid_argument("has_isolated_zero: components of different degrees");
    }
    e = std::get<unsigned>(*deg);
  }
  mode = n <= 3 ? "exact" : "probabilistic";
  if (!e) {
    return false;
  }
  // Macaulay: n forms of degree e in n variables have only the trivial common
  // zero iff their multiples span every form of degree n(e-1)+1.
  const unsigned top = static_cast<unsigned>(n) * (*e - 1) + 1;
  std::vector<Monomial> rows_basis;
  monomials_of_degree(n, top, rows_basis);
  std::map<Monomial, std::size_t, MonomialLess> row_of;
  for (std::size_t i = 0; i < rows_basis.size(); ++i) {
    row_of.emplace(rows_basis[i], i);
  }
  std::vector<Monomial> multipliers;
  monomials_of_degree(n, top - *e, multipliers);
  std::vector<std::vector<std::pair<std::size_t, Rational>>> columns;
  for (std::size_t i = 0; i < n; ++i) {
    if (z[i].is_zero()) {
      continue;
    }
    for (const Monomial& mu : multipliers) {
      std::vector<std::pair<std::size_t, Rational>> col;
      for (const Term& t : z[i].terms()) {
        col.emplace_back(row_of.at(t.mono * mu), t.coeff);
      }
      columns.push_back(std::move(col));
    }
  }
  if (columns.size() < rows_basis.size()) {
    return false;
  }
  if (n <= 3) {
    Matrix m(rows_basis.size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      for (const auto& [r, v] : columns[c]) {
        m(r, c) = v;
      }
    }
    return rank_bareiss(m) == rows_basis.size();
  }
  std::uint64_t prime = opts.prime;
  for (unsigned attempt = 0; attempt < std::max(1u, opts.trials); ++attempt) {
    const ModField field(prime);
    std::vector<std::vector<std::uint64_t>> m(rows_basis.size(), std::vector<std::uint64_t>(columns.size(), 0));
    bool usable = true;
    for (std::size_t c = 0; c < columns.size() && usable; ++c) {
      for (const auto& [r, v] : columns[c]) {
        try {
          m[r][c] = field.reduce(v);
        } catch (const std::domain_error&) {
          usable = false;
          break;
        }
      }
    }
    if (usable && rank_mod(std::move(m), prime) == rows_basis.size()) {
      return true;
    }
    prime = previous_prime(prime);
  }
  return false;
}

ConicCheck is_conic_ngk_at(const PForm& a, const Point& p, unsigned d, const IsolationOptions& opts) {
  if (d < 2) {
    throw std::invalid_argument("conic degree must be at least 2");
  }
  require_codim_two(a, "is_conic_ngk_at");
  ConicCheck out;
  const Jet jet = jet_at(a, p, d + 1);
  for (unsigned r = 0; r <= d; ++r) {
    if (!homogeneous_part(jet, r).is_zero()) {
      out.failure = "(i) the " + std::to_string(d) + "-jet does not vanish (nonzero slice of degree " +
                    std::to_string(r) + ")";
      return out;
    }
  }
  PForm h = homogeneous_part(jet, d + 1);
  if (h.is_zero()) {
    out.failure = "(ii) the slice of degree " + std::to_string(d + 1) + " vanishes";
    return out;
  }
  if (!interior_product(PVec::radial(h.nvars()), h).is_zero()) {
    out.failure = "(iii) the slice of degree " + std::to_string(d + 1) + " is not annihilated by the radial field";
    return out;
  }
  std::string mode;
  if (!has_isolated_zero(rotational(h), opts, mode)) {
    out.failure = "(iv) the rotational of the slice has a non-isolated zero (" + mode + ")";
    return out;
  }
  out.record = ConicRecord{d, mode, std::move(h)};
  return out;
}

PForm normal_type_at(const PForm& a, const Point& p, unsigned d, const IsolationOptions& opts) {
  ConicCheck c = is_conic_ngk_at(a, p, d, opts);
  if (!c.record) {
    throw std::domain_error("not a conic NGK point: " + c.failure);
  }
  return std::move(c.record->normal_type);
}

ConicCheck conic_plane_restriction(const PForm& a, const AffinePlane& plane, const Point& p, unsigned d,
                                   const IsolationOptions& opts) {
  const std::size_t n = a.nvars();
  const std::size_t k = plane.directions.size();
  if (k != a.degree() + 2) {
    throw std::invalid_argument("plane has dimension " + std::to_string(k) + ", expected form degree + 2 = " +
                                std::to_string(a.degree() + 2));
  }
  if (plane.base.size() != n || p.size() != n) {
    throw std::invalid_argument("plane base or point has the wrong length");
  }
  Matrix dirs(n, k);
  for (std::size_t j = 0; j < k; ++j) {
    if (plane.directions[j].size() != n) {
      throw std::invalid_argument("plane direction has the wrong length");
    }
    for (std::size_t i = 0; i < n; ++i) {
      dirs(i, j) = plane.directions[j][i];
    }
  }
  if (rank_bareiss(dirs) != k) {
    throw std::invalid_argument("plane directions are linearly dependent");
  }
  std::vector<Rational> offset(n);
  for (std::size_t i = 0; i < n; ++i) {
    offset[i] = p[i] - plane.base[i];
  }
  auto t = solve(dirs, offset);
  if (!t) {
    throw std::invalid_argument("the point does not lie on the plane");
  }
  std::vector<Poly> param;
  for (std::size_t i = 0; i < n; ++i) {
    Poly c = Poly::constant(k, plane.base[i]);
    for (std::size_t j = 0; j < k; ++j) {
      c += Poly::variable(k, j) * dirs(i, j);
    }
    param.push_back(std::move(c));
  }
  return is_conic_ngk_at(pullback(param, a), *t, d, opts);
}

TangentSymmetry verify_tangent_symmetry(const PForm& a, const PVec& y) {
  TangentSymmetry out;
  out.kills_form = a.degree() == 0 ? true : interior_product(y, a).is_zero();
  const PForm da = exterior_derivative(a);
  out.kills_derivative = a.degree() == a.nvars() || interior_product(y, da).is_zero();
  out.lie_identity = lie_derivative(y, a) == a;
  return out;
}

QuasiHomogeneity quasi_homogeneity_check(const PVec& s, const PVec& x) {
  if (s.nvars() != x.nvars()) {
    throw std::invalid_argument("quasi_homogeneity_check: variable-count mismatch");
  }
  QuasiHomogeneity out;
  bool linear = true;
  for (std::size_t i = 0; i < s.nvars(); ++i) {
    auto deg = homogeneous_degree(s[i]);
    if (!deg || (std::holds_alternative<unsigned>(*deg) && std::get<unsigned>(*deg) != 1)) {
      linear = false;
    }
  }
  if (linear) {
    out.one_minus_trace = Rational(1) - trace(linear_coefficients(s));
  }
  const PVec bracket = lie_bracket(s, x);
  for (std::size_t i = 0; i < x.nvars(); ++i) {
    if (x[i].is_zero()) {
      continue;
    }
    const Term& lead = x[i].leading_term();
    const Rational lambda = bracket[i].coeff(lead.mono) / lead.coeff;
    if (bracket == lambda * x) {
      out.lambda = lambda;
    }
    break;
  }
  return out;
}

namespace {

std::vector<Integer> divisors_of(Integer v, bool& ok) {
  ok = true;
  v = abs(v);
  if (v == 0 || v > Integer("1000000000000")) {
    ok = false;
    return {};
  }
  const unsigned long n = v.get_ui();
  std::vector<Integer> out;
  for (unsigned long i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      out.emplace_back(i);
      if (i != n / i) {
        out.emplace_back(n / i);
      }
    }
  }
  return out;
}

Rational eval_univariate(const std::vector<Rational>& c, const Rational& t) {
  Rational acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * t + c[i];
  }
  return acc;
}

std::vector<Rational> deflate(const std::vector<Rational>& c, const Rational& r) {
  // Synthetic division by (t - r), coefficients lowest first.
  const std::size_t n = c.size() - 1;
  std::vector<Rational> q(n);
  Rational carry = c[n];
  for (std::size_t i = n; i-- > 0;) {
    q[i] = carry;
    carry = c[i] + carry * r;
  }
  return q;
}

// Rational roots with multiplicity; `rest` receives the cofactor. `complete`
// is false when coefficients were too large to enumerate candidates.
std::vector<Rational> rational_roots(std::vector<Rational> c, std::vector<Rational>& rest, bool& complete) {
  std::vector<Rational> roots;
  complete = true;
  while (c.size() > 1 && is_zero(c[0])) {
    roots.emplace_back(0);
    c.erase(c.begin());
  }
  bool found = true;
  while (found && c.size() > 1) {
    found = false;
    Integer lcm_den = 1;
    for (const Rational& x : c) {
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
    }
    const Integer a0 = Rational(c.front() * lcm_den).get_num();
    const Integer an = Rational(c.back() * lcm_den).get_num();
    bool ok0 = false;
    bool okn = false;
    const auto pd = divisors_of(a0, ok0);
    const auto qd = divisors_of(an, okn);
    if (!ok0 || !okn) {
      complete = false;
      break;
    }
    for (const Integer& pp : pd) {
      for (const Integer& qq : qd) {
        for (int sign : {1, -1}) {
          const Rational cand = normalized(Rational(pp * sign, qq));
          if (is_zero(eval_univariate(c, cand))) {
            roots.push_back(cand);
            c = deflate(c, cand);
            found = true;
            break;
          }
        }
        if (found) {
          break;
        }
      }
      if (found) {
        break;
      }
    }
  }
  rest = std::move(c);
  return roots;
}

}  // namespace

SingularityClass classify_singularity_1d(const Matrix& linear_part) {
  SingularityClass out;
  out.info = linear_part_info(linear_part);
  const std::size_t n = linear_part.rows();
  out.nondegenerate = !is_zero(out.info.determinant);
  out.kupka_type = !is_zero(out.info.trace);
  out.hyperbolic_mode = "exact";
  if (!out.nondegenerate) {
    out.hyperbolic = "no";
    return out;
  }
  if (n == 1) {
    out.hyperbolic = "yes";
    return out;
  }
  std::vector<Rational> rest;
  bool complete = false;
  const auto roots = rational_roots(out.info.charpoly, rest, complete);
  if (complete) {
    if (roots.size() >= 2) {
      // Two real eigenvalues have a real ratio.
      out.hyperbolic = "no";
      return out;
    }
    if (rest.size() == 3) {
      const Rational& c = rest[0];
      const Rational& b = rest[1];
      const Rational& a = rest[2];
      const Rational disc = b * b - 4 * a * c;
      if (sgn(disc) >= 0) {
        out.hyperbolic = "no";
      } else {
        // Conjugate pair: its ratio is real exactly when the pair is purely imaginary.
        out.hyperbolic = is_zero(b) ? "no" : "yes";
      }
      return out;
    }
  }
  out.hyperbolic_mode = "numerical";
  Eigen::MatrixXd m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = linear_part(i, j).get_d();
    }
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
  const auto ev = solver.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    out.eigenvalues.push_back(ev[i]);
  }
  bool all_nonreal = true;
  for (std::size_t i = 0; i < out.eigenvalues.size(); ++i) {
    for (std::size_t j = 0; j < out.eigenvalues.size(); ++j) {
      if (i == j) {
        continue;
      }
      const std::complex<double> ratio = out.eigenvalues[i] / out.eigenvalues[j];
      if (std::abs(ratio.imag()) <= kEigenTolerance * std::max(1.0, std::abs(ratio))) {
        all_nonreal = false;
      }
    }
  }
  out.hyperbolic = all_nonreal ? "yes" : "inconclusive";
  return out;
}

SingularityClass classify_singularity_1d(const PVec& x, const Point& p) {
  if (p.size() != x.nvars()) {
    throw std::invalid_argument("classify_singularity_1d: point length mismatch");
  }
  const std::size_t n = x.nvars();
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_zero(eval(x[i], p))) {
      throw std::invalid_argument("classify_singularity_1d: the field does not vanish at the point");
    }
  }
  Matrix j(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      j(r, c) = eval(partial(x[r], c), p);
    }
  }
  return classify_singularity_1d(j);
}

Matrix transversal_linear_part(const PForm& a, const Point& p) {
  if (!kupka_at(a, p)) {
    throw std::domain_error("transversal_linear_part: not a Kupka point");
  }
  const Jet jet = jet_at(a, p, 1);
  const PForm lin = homogeneous_part(jet, 1);
  const PForm omega = exterior_derivative(lin);
  const auto& comps = omega.components();
  const FormIndex w = comps.begin()->first;
  const Rational c = comps.begin()->second.constant_term();
  const std::size_t k = w.size();
  const std::size_t n = a.nvars();
  // Coordinates outside w are set to zero; dx_i for i outside w drop out.
  std::vector<Poly> embed;
  for (std::size_t i = 0; i < n; ++i) {
    auto it = std::find(w.begin(), w.end(), i);
    embed.push_back(it == w.end() ? Poly(k) : Poly::variable(k, static_cast<std::size_t>(it - w.begin())));
  }
  const PForm restricted = pullback(embed, lin);
  Matrix m(k, k);
  for (std::size_t s = 0; s < k; ++s) {
    FormIndex rest;
    for (std::size_t t = 0; t < k; ++t) {
      if (t != s) {
        rest.push_back(t);
      }
    }
    const Poly v = restricted.coeff(rest) * (Rational(s % 2 == 0 ? 1 : -1) / c);
    for (std::size_t t = 0; t < k; ++t) {
      m(s, t) = v.coeff(Monomial::variable(t));
    }
  }
  return m;
}

PForm restrict_to_chart(const PForm& a, std::size_t j) {
  const std::size_t n = a.nvars();
  if (j >= n || n < 2) {
    throw std::out_of_range("restrict_to_chart: chart index out of range");
  }
  std::vector<Poly> embed;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == j) {
      embed.push_back(Poly::constant(n - 1, Rational(1)));
    } else {
      embed.push_back(Poly::variable(n - 1, i < j ? i : i - 1));
    }
  }
  return pullback(embed, a);
}

Point to_chart(const Point& p, std::size_t j) {
  if (j >= p.size() || is_zero(p[j])) {
    throw std::invalid_argument("point lies outside the chart x" + std::to_string(j) + " = 1");
  }
  Point out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i != j) {
      out.push_back(p[i] / p[j]);
    }
  }
  return out;
}

namespace {

std::vector<Poly> minors_with_radial(const std::vector<Poly>& x) {
  const std::size_t n = x.size();
  std::vector<Poly> out;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      out.push_back(Poly::variable(n, a) * x[b] - Poly::variable(n, b) * x[a]);
    }
  }
  return out;
}

}  // namespace

unsigned sing_count_p2(const Foliation1D& g, std::size_t main_chart, std::uint64_t seed) {
  if (g.m != 2) {
    throw std::invalid_argument("sing_count_p2 needs a foliation of P^2");
  }
  if (main_chart > 2) {
    throw std::out_of_range("chart index out of range");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-3, 3);
  const std::size_t n = 3;
  for (int attempt = 0; attempt < 24; ++attempt) {
    Matrix a = Matrix::identity(n);
    if (attempt > 0) {
      do {
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            a(i, j) = entry(rng);
          }
        }
      } while (is_zero(determinant(a)));
    }
    // X'(y) = A^{-1} X(A y): the same foliation in coordinates x = A y.
    std::vector<Poly> ay;
    for (std::size_t i = 0; i < n; ++i) {
      Poly c(n);
      for (std::size_t j = 0; j < n; ++j) {
        c += Poly::variable(n, j) * a(i, j);
      }
      ay.push_back(std::move(c));
    }
    Matrix inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> e(n, Rational(0));
      e[j] = 1;
      const auto col = *solve(a, e);
      for (std::size_t i = 0; i < n; ++i) {
        inv(i, j) = col[i];
      }
    }
    std::vector<Poly> composed;
    for (std::size_t j = 0; j < n; ++j) {
      composed.push_back(compose(g.X[j], ay));
    }
    std::vector<Poly> x;
    for (std::size_t i = 0; i < n; ++i) {
      Poly c(n);
      for (std::size_t j = 0; j < n; ++j) {
        c += composed[j] * inv(i, j);
      }
      x.push_back(std::move(c));
    }
    // No singular point may lie on the line y_main = 0.
    std::vector<Poly> on_line;
    std::vector<Poly> line_embed;
    for (std::size_t i = 0; i < n; ++i) {
      line_embed.push_back(i == main_chart ? Poly(n) : Poly::variable(n, i));
    }
    for (const Poly& mnr : minors_with_radial(x)) {
      on_line.push_back(compose(mnr, line_embed));
    }
    const Poly line_gcd = gcd_all(on_line);
    if (line_gcd.is_zero() || !line_gcd.is_constant()) {
      continue;
    }
    // Chart y_main = 1 with affine coordinates (u, v).
    std::size_t u = main_chart == 0 ? 1 : 0;
    std::size_t v = main_chart == 2 ? 1 : 2;
    std::vector<Poly> chart_embed;
    for (std::size_t i = 0; i < n; ++i) {
      chart_embed.push_back(i == main_chart ? Poly::constant(n, Rational(1)) : Poly::variable(n, i));
    }
    const Poly pm = compose(x[main_chart], chart_embed);
    const Poly A = compose(x[u], chart_embed) - Poly::variable(n, u) * pm;
    const Poly B = compose(x[v], chart_embed) - Poly::variable(n, v) * pm;
    if (A.is_zero() || B.is_zero()) {
      throw PositiveDimensional("the singular scheme contains a curve");
    }
    // Shear u -> u + s v so that A has constant leading coefficient in v.
    const unsigned top = *A.total_degree();
    const Poly a_top = homogeneous_slice(A, top);
    Rational s = 0;
    for (int k = 0;; ++k) {
      s = k;
      Point at(n, Rational(0));
      at[u] = s;
      at[v] = 1;
      if (!is_zero(eval(a_top, at))) {
        break;
      }
    }
    std::vector<Poly> shear;
    for (std::size_t i = 0; i < n; ++i) {
      shear.push_back(i == u ? Poly::variable(n, u) + Poly::variable(n, v) * s : Poly::variable(n, i));
    }
    const Poly res = resultant(compose(A, shear), compose(B, shear), v);
    if (res.is_zero()) {
      throw PositiveDimensional("the singular scheme contains a curve");
    }
    return *res.total_degree();
  }
  throw PositiveDimensional("every tried line meets the singular set; it is not finite");
}

PointReport analyze_point(const PForm& a, const Point& p, const AnalyzeOptions& opts) {
  PointReport r;
  r.point = p;
  r.singular = singular_at(a, p);
  r.kupka = r.singular && kupka_at(a, p);
  const bool codim_two = a.nvars() >= 2 && a.degree() + 2 == a.nvars();
  if (codim_two) {
    const LinearPartInfo info = rotational_linear_part(a, p);
    r.rot_linear_part = info.matrix;
    r.nilpotent_rot = info.nilpotent;
  } else {
    r.notes.push_back("rotational linear part needs form degree N-2");
  }
  if (opts.conic_degree) {
    if (!r.singular) {
      r.notes.push_back("conic test skipped: the point is not singular");
    } else {
      ConicCheck c;
      if (opts.plane) {
        c = conic_plane_restriction(a, *opts.plane, p, *opts.conic_degree, opts.isolation);
      } else if (codim_two) {
        c = is_conic_ngk_at(a, p, *opts.conic_degree, opts.isolation);
      } else {
        c.failure = "conic test needs form degree N-2 or a plane";
      }
      if (c.record) {
        r.conic_ngk = std::move(c.record);
      } else {
        r.notes.push_back("not conic NGK: " + c.failure);
      }
    }
  }
  return r;
}

}  // namespace foliage
