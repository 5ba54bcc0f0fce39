#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "foliage/exterior.hpp"
#include "foliage/foliation.hpp"
#include "foliage/linalg.hpp"
#include "foliage/ratmap.hpp"

namespace foliage {

/// Linear part of a vector field at a point, with its invariants.
struct LinearPartInfo {
  Matrix matrix;
  Rational trace;
  Rational determinant;
  /// det(t I - A) coefficients, lowest degree first.
  std::vector<Rational> charpoly;
  bool nilpotent = false;
};

LinearPartInfo linear_part_info(const Matrix& a);

/// Settings for certifying that a homogeneous vector field has an isolated zero.
struct IsolationOptions {
  /// Used for the modular rank when the ambient dimension is at least 4.
  std::uint64_t prime = kPrime62;
  /// Number of primes tried before reporting a non-isolated zero.
  unsigned trials = 8;
};

struct ConicRecord {
  unsigned d = 0;
  /// "exact" or "probabilistic", naming how isolation was decided.
  std::string mode;
  /// Degree-(d+1) slice of the jet, in coordinates centered at the point.
  PForm normal_type{1, 0};
};

struct ConicCheck {
  std::optional<ConicRecord> record;
  /// Empty on success; otherwise which condition failed and why.
  std::string failure;
};

struct PointReport {
  Point point;
  bool singular = false;
  bool kupka = false;
  std::optional<Matrix> rot_linear_part;
  std::optional<bool> nilpotent_rot;
  std::optional<ConicRecord> conic_ngk;
  std::vector<std::string> notes;
};

/// Every coefficient of a vanishes at p.
bool singular_at(const PForm& a, const Point& p);
/// a(p) == 0 and da(p) != 0.
bool kupka_at(const PForm& a, const Point& p);

struct FiberPointResult {
  Point point;
  bool kupka = false;
};

struct KupkaFiberReport {
  bool pass = true;
  std::vector<FiberPointResult> points;
  std::vector<std::string> warnings;
};

/// kupka_at at every point of the fiber of f over `target`. Throws
/// std::invalid_argument when a point lies in I(f) or outside the fiber.
KupkaFiberReport kupka_on_fiber_check(const PForm& eta, const RationalMap& f, const Point& target,
                                      const std::vector<Point>& points);

/// Jacobian at p of the rotational of a. Requires formdeg == N-2.
LinearPartInfo rotational_linear_part(const PForm& a, const Point& p);

/// True when the homogeneous polynomial field z (all components of degree e)
/// vanishes only at the origin. `mode` receives "exact" or "probabilistic".
bool has_isolated_zero(const PVec& z, const IsolationOptions& opts, std::string& mode);

/// Conic NGK test of degree d at p: the d-jet vanishes, the (d+1)-slice h is
/// nonzero, i_R h == 0 about p, and rot(h) has an isolated zero at p.
/// Throws std::invalid_argument when d < 2 or formdeg != N-2.
ConicCheck is_conic_ngk_at(const PForm& a, const Point& p, unsigned d, const IsolationOptions& opts = {});

/// The normal type h of a conic NGK point. Throws std::domain_error when p is not one.
PForm normal_type_at(const PForm& a, const Point& p, unsigned d, const IsolationOptions& opts = {});

/// Affine subspace {base + sum_j t_j directions[j]}.
struct AffinePlane {
  Point base;
  std::vector<Point> directions;
};

/// Restricts a to the plane through p and runs the conic test there.
/// Throws std::invalid_argument when p is off the plane or the dimension is not q+2.
ConicCheck conic_plane_restriction(const PForm& a, const AffinePlane& plane, const Point& p, unsigned d,
                                   const IsolationOptions& opts = {});

struct TangentSymmetry {
  bool kills_form = false;
  bool kills_derivative = false;
  /// L_Y a == a.
  bool lie_identity = false;
};

TangentSymmetry verify_tangent_symmetry(const PForm& a, const PVec& y);

struct QuasiHomogeneity {
  /// lambda with [S, X] == lambda X, when it exists.
  std::optional<Rational> lambda;
  /// 1 - tr(S) when S is linear.
  std::optional<Rational> one_minus_trace;
};

QuasiHomogeneity quasi_homogeneity_check(const PVec& s, const PVec& x);

struct SingularityClass {
  LinearPartInfo info;
  bool nondegenerate = false;
  bool kupka_type = false;
  /// "yes", "no" or "inconclusive".
  std::string hyperbolic;
  /// "exact" or "numerical".
  std::string hyperbolic_mode;
  /// Filled in numerical mode.
  std::vector<std::complex<double>> eigenvalues;
};

inline constexpr double kEigenTolerance = 1e-9;

SingularityClass classify_singularity_1d(const Matrix& linear_part);
/// Classifies the zero p of X. Throws std::invalid_argument when X(p) != 0.
SingularityClass classify_singularity_1d(const PVec& x, const Point& p);

/// Linear part, up to a nonzero scalar, of the normal type of a at a Kupka
/// point, read off on a coordinate plane transverse to the leaves. Throws
/// std::domain_error when p is not a Kupka point.
Matrix transversal_linear_part(const PForm& a, const Point& p);

/// Restriction of a homogeneous form to the chart x_j = 1 (dx_j = 0).
PForm restrict_to_chart(const PForm& a, std::size_t j);
/// Affine coordinates of p in the chart x_j = 1. Throws when p_j == 0.
Point to_chart(const Point& p, std::size_t j);

/// Thrown when a zero set that should be finite is not.
class PositiveDimensional : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Number of singularities, with multiplicity, of a foliation of P^2: the
/// common zeros of the 2x2 minors of (X, R). Works in random projective
/// coordinates with no singularity on the line x_main = 0 and counts in
/// that chart by a resultant. Throws PositiveDimensional.
unsigned sing_count_p2(const Foliation1D& g, std::size_t main_chart = 2, std::uint64_t seed = kDefaultSeed);

struct AnalyzeOptions {
  std::optional<unsigned> conic_degree;
  std::optional<AffinePlane> plane;
  IsolationOptions isolation;
};

PointReport analyze_point(const PForm& a, const Point& p, const AnalyzeOptions& opts = {});

}  // namespace foliage
