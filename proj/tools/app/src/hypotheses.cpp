#include "foliage_app/hypotheses.hpp"

#include <chrono>

#include "foliage/text.hpp"

namespace foliage::app {

namespace {

std::size_t first_nonzero(const Point& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!is_zero(p[i])) {
      return i;
    }
  }
  throw std::invalid_argument("the zero vector is not a projective point");
}

// Differential at p (chart x_j = 1) of f~ restricted to that chart.
Matrix chart_differential(const RationalMap& f, const Point& p, std::size_t j) {
  Point q = p;
  for (Rational& x : q) {
    x /= p[j];
  }
  const Matrix full = jacobian_at(f, q);
  Matrix out(full.rows(), full.cols() - 1);
  for (std::size_t r = 0; r < full.rows(); ++r) {
    std::size_t c2 = 0;
    for (std::size_t c = 0; c < full.cols(); ++c) {
      if (c != j) {
        out(r, c2++) = full(r, c);
      }
    }
  }
  return out;
}

// Pulls a back by the linear map z -> l z.
PForm linear_pullback(const Matrix& l, const PForm& a) {
  std::vector<Poly> comps;
  for (std::size_t i = 0; i < l.rows(); ++i) {
    Poly c(l.cols());
    for (std::size_t k = 0; k < l.cols(); ++k) {
      c += Poly::variable(l.cols(), k) * l(i, k);
    }
    comps.push_back(std::move(c));
  }
  return pullback(comps, a);
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols() || is_zero(determinant(m))) {
    return std::nullopt;
  }
  const std::size_t n = m.rows();
  Matrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> e(n, Rational(0));
    e[j] = 1;
    const auto col = *solve(m, e);
    for (std::size_t i = 0; i < n; ++i) {
      inv(i, j) = col[i];
    }
  }
  return inv;
}

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double millis() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

bool proportional(const PForm& a, const PForm& b) {
  if (a.nvars() != b.nvars() || a.degree() != b.degree() || a.is_zero() || b.is_zero()) {
    return false;
  }
  const auto& [key, coeff] = *a.components().begin();
  const Poly other = b.coeff(key);
  if (other.is_zero()) {
    return false;
  }
  const Term& lead = coeff.leading_term();
  const Rational c = other.coeff(lead.mono) / lead.coeff;
  return !is_zero(c) && b == c * a;
}

AssertionResult check_conic_at_witnesses(const std::string& name, const RationalMap& f, const PForm& eta,
                                         const std::vector<Point>& witnesses, unsigned d,
                                         const std::optional<Foliation1D>& g) {
  Timer timer;
  AssertionResult r{name, "P1", Outcome::kPass, "exact", "", nullptr, 0};
  if (witnesses.empty()) {
    r.outcome = Outcome::kInconclusive;
    r.detail = "no indeterminacy witnesses supplied";
    return r;
  }
  if (eta.nvars() < 3 || eta.degree() + 3 != eta.nvars()) {
    r.outcome = Outcome::kInconclusive;
    r.detail = "chart restriction has form degree != N-2; use the plane-restriction check";
    return r;
  }
  std::optional<PForm> reference;
  if (g) {
    reference = omega_from_1d(*g);
  }
  std::string mode = "exact";
  for (const Point& p : witnesses) {
    if (!is_indeterminacy_point(f, p)) {
      r.outcome = Outcome::kFail;
      r.detail = "witness is not an indeterminacy point";
      r.counterexample = point_to_json(p);
      return r;
    }
    const std::size_t j = first_nonzero(p);
    const ConicCheck c = is_conic_ngk_at(restrict_to_chart(eta, j), to_chart(p, j), d);
    if (!c.record) {
      r.outcome = Outcome::kFail;
      r.detail = "not conic NGK of degree " + std::to_string(d) + ": " + c.failure;
      r.counterexample = point_to_json(p);
      return r;
    }
    if (c.record->mode != "exact") {
      mode = c.record->mode;
    }
    const auto inv = inverse(chart_differential(f, p, j));
    if (!inv) {
      r.outcome = Outcome::kFail;
      r.detail = "the chart differential of the map is singular at a witness";
      r.counterexample = point_to_json(p);
      return r;
    }
    const PForm pushed = linear_pullback(*inv, c.record->normal_type);
    if (!reference) {
      reference = pushed;
    } else if (!proportional(*reference, pushed)) {
      r.outcome = Outcome::kFail;
      r.detail = "normal type differs from the " + std::string(g ? "target foliation" : "first witness");
      r.counterexample = point_to_json(p);
      return r;
    }
  }
  r.mode = mode;
  r.detail = std::to_string(witnesses.size()) + " witnesses conic NGK of degree " + std::to_string(d) +
             (g ? ", normal type equals the target foliation" : ", normal types agree");
  r.millis = timer.millis();
  return r;
}

AssertionResult check_kupka_fibers(const std::string& name, const std::string& check, const RationalMap& f,
                                   const PForm& eta, const Point& target, const std::vector<Point>& fibers) {
  Timer timer;
  AssertionResult r{name, check, Outcome::kPass, "exact", "", nullptr, 0};
  if (fibers.empty()) {
    r.outcome = Outcome::kInconclusive;
    r.detail = "no fiber witnesses supplied";
    return r;
  }
  for (const Point& p : fibers) {
    if (is_indeterminacy_point(f, p)) {
      r.outcome = Outcome::kFail;
      r.detail = "fiber point lies in the indeterminacy locus";
      r.counterexample = point_to_json(p);
      return r;
    }
  }
  const KupkaFiberReport rep = kupka_on_fiber_check(eta, f, target, fibers);
  for (const auto& fp : rep.points) {
    if (!fp.kupka) {
      r.outcome = Outcome::kFail;
      r.detail = "fiber point is not a Kupka point";
      r.counterexample = point_to_json(fp.point);
      return r;
    }
  }
  r.detail = std::to_string(fibers.size()) + " fiber points over " + to_string(target) + " are Kupka";
  r.millis = timer.millis();
  return r;
}

AssertionResult check_transversal_type(const std::string& name, const std::string& check, const PForm& eta,
                                       const Point& p) {
  Timer timer;
  AssertionResult r{name, check, Outcome::kPass, "exact", "", nullptr, 0};
  const std::size_t j = first_nonzero(p);
  const PForm chart = restrict_to_chart(eta, j);
  const Point pc = to_chart(p, j);
  if (!kupka_at(chart, pc)) {
    r.outcome = Outcome::kFail;
    r.detail = "not a Kupka point";
    r.counterexample = point_to_json(p);
    return r;
  }
  const SingularityClass cls = classify_singularity_1d(transversal_linear_part(chart, pc));
  r.mode = cls.hyperbolic_mode;
  r.detail = "transversal linear part " + matrix_to_json(cls.info.matrix).dump() + ", hyperbolic: " + cls.hyperbolic;
  if (cls.hyperbolic == "no") {
    r.outcome = Outcome::kFail;
    r.counterexample = point_to_json(p);
  } else if (cls.hyperbolic == "inconclusive") {
    r.outcome = Outcome::kInconclusive;
  }
  r.millis = timer.millis();
  return r;
}

AssertionResult check_conic_on_planes(const std::string& name, const PForm& eta, const std::vector<Point>& witnesses,
                                      unsigned d, const std::optional<AffinePlane>& plane) {
  Timer timer;
  AssertionResult r{name, "Pt1", Outcome::kPass, "exact", "", nullptr, 0};
  if (witnesses.empty()) {
    r.outcome = Outcome::kInconclusive;
    r.detail = "no indeterminacy witnesses supplied";
    return r;
  }
  std::string mode = "exact";
  for (const Point& p : witnesses) {
    const std::size_t j = first_nonzero(p);
    const PForm chart = restrict_to_chart(eta, j);
    const Point pc = to_chart(p, j);
    const std::size_t k = chart.degree() + 2;
    if (k > chart.nvars()) {
      r.outcome = Outcome::kInconclusive;
      r.detail = "the chart is too small for a plane of dimension q+2";
      return r;
    }
    ConicCheck c;
    if (plane) {
      c = conic_plane_restriction(chart, *plane, pc, d);
    } else {
      c.failure = "no coordinate plane has a nonzero slice of degree " + std::to_string(d + 1);
      for (const FormIndex& dirs : index_subsets(chart.nvars(), k)) {
        AffinePlane candidate{pc, {}};
        for (std::size_t i : dirs) {
          Point e(chart.nvars(), Rational(0));
          e[i] = 1;
          candidate.directions.push_back(std::move(e));
        }
        ConicCheck attempt = conic_plane_restriction(chart, candidate, pc, d);
        if (attempt.record || attempt.failure.rfind("(ii)", 0) != 0) {
          c = std::move(attempt);
          break;
        }
      }
    }
    if (!c.record) {
      r.outcome = Outcome::kFail;
      r.detail = "restriction is not conic NGK: " + c.failure;
      r.counterexample = point_to_json(p);
      return r;
    }
    if (c.record->mode != "exact") {
      mode = c.record->mode;
    }
  }
  r.mode = mode;
  r.detail = std::to_string(witnesses.size()) + " witnesses conic on the restricting plane";
  r.millis = timer.millis();
  return r;
}

AssertionResult check_not_certifiable(const std::string& name, const std::string& check) {
  return {name, check, Outcome::kInconclusive, "exact",
          "not certifiable: membership in the generic class needs global conditions (no invariant curves)",
          nullptr, 0};
}

}  // namespace foliage::app
