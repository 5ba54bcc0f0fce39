#include <gtest/gtest.h>

#include "foliage/singular.hpp"
#include "foliage/text.hpp"
#include "foliage_app/catalog.hpp"

using namespace foliage;

namespace {

Point pt(std::initializer_list<Rational> xs) { return Point(xs); }

const PForm& worked_eta() {
  static const PForm eta =
      pullback_foliation(app::binomial_map(2), app::hyperbolic_quadratic_foliation()).eta;
  return eta;
}

PForm g2_omega() { return omega_from_1d(app::hyperbolic_quadratic_foliation()); }

}  // namespace

TEST(Singular, KupkaOnFibers) {
  for (const Rational& t : {Rational(2), Rational(3), Rational(1, 2)}) {
    const Point p = pt({1, 1, 1, t});
    EXPECT_TRUE(singular_at(worked_eta(), p));
    EXPECT_TRUE(kupka_at(worked_eta(), p));
  }
  const Point regular = pt({1, 2, 3, 5});
  EXPECT_FALSE(singular_at(worked_eta(), regular));
  EXPECT_FALSE(kupka_at(worked_eta(), regular));
}

TEST(Singular, FiberCheckGuards) {
  const RationalMap f = app::binomial_map(2);
  const Point target = pt({0, 0, 1});
  const auto ok = kupka_on_fiber_check(worked_eta(), f, target, {pt({1, 1, 1, 2}), pt({1, 1, 1, 3})});
  EXPECT_TRUE(ok.pass);
  EXPECT_EQ(ok.points.size(), 2u);
  EXPECT_THROW(kupka_on_fiber_check(worked_eta(), f, target, {pt({1, 1, 1, 1})}), std::invalid_argument);
  EXPECT_THROW(kupka_on_fiber_check(worked_eta(), f, target, {pt({1, 2, 1, 1})}), std::invalid_argument);
  const auto empty = kupka_on_fiber_check(worked_eta(), f, target, {});
  EXPECT_TRUE(empty.pass);
  EXPECT_FALSE(empty.warnings.empty());
}

TEST(Singular, RotationalLinearPartIsJacobianOfRotational) {
  const PForm omega = omega_from_1d(app::diagonal_linear_foliation());
  const Point p = pt({1, -1, 2});
  const LinearPartInfo info = rotational_linear_part(omega, p);
  const PVec z = rotational(omega);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_EQ(info.matrix(i, j), eval(partial(z[i], j), p));
    }
  }
  const LinearPartInfo zero = rotational_linear_part(g2_omega(), pt({0, 0, 0}));
  EXPECT_EQ(zero.matrix, Matrix(3, 3));
  EXPECT_TRUE(zero.nilpotent);
}

TEST(Singular, IsolatedZeroCertification) {
  std::string mode;
  const PVec squares(std::vector<Poly>{parse_poly("x0^2", 3), parse_poly("x1^2", 3), parse_poly("x2^2", 3)});
  EXPECT_TRUE(has_isolated_zero(squares, {}, mode));
  EXPECT_EQ(mode, "exact");
  const PVec axes(std::vector<Poly>{parse_poly("x0*x1", 3), parse_poly("x1*x2", 3), parse_poly("x0*x2", 3)});
  EXPECT_FALSE(has_isolated_zero(axes, {}, mode));
  const PVec four(std::vector<Poly>{parse_poly("x0^2 + x3^2", 4), parse_poly("x1^2", 4), parse_poly("x2^2", 4),
                                    parse_poly("x3^2 - x0*x1", 4)});
  EXPECT_TRUE(has_isolated_zero(four, {}, mode));
  EXPECT_EQ(mode, "probabilistic");
}

TEST(Singular, ConicAtOriginAndTranslate) {
  const PForm omega = g2_omega();
  const ConicCheck c = is_conic_ngk_at(omega, pt({0, 0, 0}), 2);
  ASSERT_TRUE(c.record.has_value()) << c.failure;
  EXPECT_EQ(c.record->mode, "exact");
  EXPECT_EQ(c.record->normal_type, omega);
  const Point shift = pt({1, 1, 1});
  const ConicCheck t = is_conic_ngk_at(translate_form(omega, shift), shift, 2);
  ASSERT_TRUE(t.record.has_value()) << t.failure;
  EXPECT_EQ(t.record->normal_type, omega);
  EXPECT_EQ(normal_type_at(omega, pt({0, 0, 0}), 2), omega);
}

TEST(Singular, ConicFailuresNameTheCondition) {
  const PForm omega = g2_omega();
  const ConicCheck wrong_degree = is_conic_ngk_at(omega, pt({0, 0, 0}), 3);
  EXPECT_FALSE(wrong_degree.record.has_value());
  EXPECT_EQ(wrong_degree.failure.substr(0, 3), "(i)");
  const ConicCheck regular = is_conic_ngk_at(omega, pt({1, 2, 3}), 2);
  EXPECT_FALSE(regular.record.has_value());
  // Rotational vanishing along lines: not isolated.
  const Foliation1D flat =
      make_foliation_1d(PVec(std::vector<Poly>{parse_poly("x0^2", 3), parse_poly("x0*x1", 3), Poly(3)}));
  const ConicCheck degenerate = is_conic_ngk_at(omega_from_1d(flat), pt({0, 0, 0}), 2);
  EXPECT_FALSE(degenerate.record.has_value());
  EXPECT_THROW(is_conic_ngk_at(omega, pt({0, 0, 0}), 1), std::invalid_argument);
  EXPECT_THROW(normal_type_at(omega, pt({1, 2, 3}), 2), std::domain_error);
}

TEST(Singular, ConicOnPlaneThroughWitness) {
  AffinePlane chart;
  chart.base = pt({1, 0, 0, 0});
  for (std::size_t i = 1; i < 4; ++i) {
    Point e(4, Rational(0));
    e[i] = 1;
    chart.directions.push_back(e);
  }
  const ConicCheck c = conic_plane_restriction(worked_eta(), chart, pt({1, 1, -1, 1}), 2);
  EXPECT_TRUE(c.record.has_value()) << c.failure;
  EXPECT_THROW(conic_plane_restriction(worked_eta(), chart, pt({2, 1, -1, 1}), 2), std::invalid_argument);
}

TEST(Singular, TangentSymmetryOfRadialRescaling) {
  for (const PForm& a : {g2_omega(), worked_eta()}) {
    const unsigned k = degree_of(a) + 1;
    const Rational rho(1, static_cast<long>(k + a.degree()));
    const TangentSymmetry ts = verify_tangent_symmetry(a, rho * PVec::radial(a.nvars()));
    EXPECT_TRUE(ts.kills_form);
    EXPECT_TRUE(ts.lie_identity);
  }
  // A wrong rescaling breaks L_Y a == a.
  const TangentSymmetry off = verify_tangent_symmetry(g2_omega(), PVec::radial(3));
  EXPECT_FALSE(off.lie_identity);
}

TEST(Singular, QuasiHomogeneity) {
  const Foliation1D g = app::cubic_foliation();
  const QuasiHomogeneity q = quasi_homogeneity_check(PVec::radial(3), g.X);
  ASSERT_TRUE(q.lambda.has_value());
  EXPECT_EQ(*q.lambda, 2);
  ASSERT_TRUE(q.one_minus_trace.has_value());
  EXPECT_EQ(*q.one_minus_trace, -2);
  const PVec mixed(std::vector<Poly>{parse_poly("x0^2", 3), parse_poly("x1", 3), Poly(3)});
  EXPECT_FALSE(quasi_homogeneity_check(PVec::radial(3), mixed).lambda.has_value());
}

TEST(Singular, HyperbolicClassification) {
  const SingularityClass rot = classify_singularity_1d(Matrix::from_rows({{1, -1}, {1, 1}}));
  EXPECT_TRUE(rot.nondegenerate);
  EXPECT_EQ(rot.hyperbolic, "yes");
  EXPECT_EQ(rot.hyperbolic_mode, "exact");
  EXPECT_EQ(classify_singularity_1d(Matrix::from_rows({{1, 0}, {0, 2}})).hyperbolic, "no");
  EXPECT_EQ(classify_singularity_1d(Matrix::from_rows({{1, 0}, {0, -1}})).hyperbolic, "no");
  // Eigenvalues +-i: ratio -1 is real.
  EXPECT_EQ(classify_singularity_1d(Matrix::from_rows({{0, -1}, {1, 0}})).hyperbolic, "no");
  const SingularityClass degenerate = classify_singularity_1d(Matrix::from_rows({{0, 0}, {0, 1}}));
  EXPECT_FALSE(degenerate.nondegenerate);
  EXPECT_EQ(degenerate.hyperbolic, "no");
  // t^3 - 1: rational root plus a complex pair.
  EXPECT_EQ(classify_singularity_1d(Matrix::from_rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}})).hyperbolic, "yes");
  // t^3 - 2 has no rational root: decided numerically.
  const SingularityClass cube = classify_singularity_1d(Matrix::from_rows({{0, 0, 2}, {1, 0, 0}, {0, 1, 0}}));
  EXPECT_EQ(cube.hyperbolic_mode, "numerical");
  EXPECT_EQ(cube.hyperbolic, "yes");
  EXPECT_EQ(cube.eigenvalues.size(), 3u);
}

TEST(Singular, AffineChartClassification) {
  const Foliation1D g = app::hyperbolic_quadratic_foliation();
  // Chart x2 = 1: Y_i = P_i - x_i P_2.
  const std::vector<Poly> subs{Poly::variable(2, 0), Poly::variable(2, 1), Poly::constant(2, 1)};
  std::vector<Poly> comps;
  const Poly p2 = compose(g.X[2], subs);
  for (std::size_t i = 0; i < 2; ++i) {
    comps.push_back(compose(g.X[i], subs) - Poly::variable(2, i) * p2);
  }
  const SingularityClass c = classify_singularity_1d(PVec(comps), pt({0, 0}));
  EXPECT_EQ(c.info.matrix, Matrix::from_rows({{1, -1}, {1, 1}}));
  EXPECT_EQ(c.hyperbolic, "yes");
  EXPECT_THROW(classify_singularity_1d(PVec(comps), pt({1, 1})), std::invalid_argument);
}

TEST(Singular, TransversalLinearPart) {
  // In the chart x0 = 1 the transverse plane is (x1, x2) and the linear part
  // is the one built into G at [0:0:1], scaled to trace 1.
  const PForm chart = restrict_to_chart(worked_eta(), 0);
  const Matrix expected = Rational(1, 2) * Matrix::from_rows({{1, -1}, {1, 1}});
  EXPECT_EQ(transversal_linear_part(chart, pt({1, 1, 2})), expected);
  // Homogeneous coordinates pick another transverse plane: same conjugacy class.
  const Matrix m = transversal_linear_part(worked_eta(), pt({1, 1, 1, 2}));
  EXPECT_EQ(characteristic_polynomial(m), characteristic_polynomial(expected));
  EXPECT_THROW(transversal_linear_part(worked_eta(), pt({1, 2, 3, 5})), std::domain_error);
}

TEST(Singular, ChartHelpers) {
  EXPECT_EQ(to_chart(pt({2, 4, 6}), 0), pt({2, 3}));
  EXPECT_THROW(to_chart(pt({0, 4, 6}), 0), std::invalid_argument);
  const PForm omega = g2_omega();
  const PForm local = restrict_to_chart(omega, 2);
  EXPECT_EQ(local.nvars(), 2u);
  EXPECT_EQ(local.degree(), 1u);
}

TEST(SingCount, KnownFoliations) {
  EXPECT_EQ(sing_count_p2(app::hyperbolic_quadratic_foliation()), 7u);
  EXPECT_EQ(sing_count_p2(app::diagonal_linear_foliation()), 3u);
  EXPECT_EQ(sing_count_p2(app::cubic_foliation()), 13u);
}

TEST(SingCount, IndependentOfChartAndSeed) {
  const Foliation1D g = app::hyperbolic_quadratic_foliation();
  for (std::size_t chart = 0; chart < 3; ++chart) {
    for (std::uint64_t seed : {1ull, 99ull}) {
      EXPECT_EQ(sing_count_p2(g, chart, seed), 7u);
    }
  }
}

TEST(SingCount, DiagonalSingularitiesAreCoordinatePoints) {
  // Oracle: a point is singular iff X is parallel to R there.
  const Foliation1D g = app::diagonal_linear_foliation();
  const PForm omega = omega_from_1d(g);
  for (const Point& p : {pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})}) {
    EXPECT_TRUE(singular_at(omega, p));
  }
  EXPECT_FALSE(singular_at(omega, pt({1, 1, 0})));
}

TEST(SingCount, CurveOfZerosThrows) {
  const Foliation1D g =
      make_foliation_1d(PVec(std::vector<Poly>{parse_poly("x0*x1", 3), parse_poly("x0*x2", 3), parse_poly("x0^2", 3)}));
  EXPECT_THROW(sing_count_p2(g), PositiveDimensional);
}

TEST(Analyze, PointReports) {
  const PointReport regular = analyze_point(g2_omega(), pt({1, 2, 3}));
  EXPECT_FALSE(regular.singular);
  EXPECT_FALSE(regular.kupka);
  EXPECT_FALSE(regular.conic_ngk.has_value());
  AnalyzeOptions opts;
  opts.conic_degree = 2;
  const PointReport conic = analyze_point(g2_omega(), pt({0, 0, 0}), opts);
  EXPECT_TRUE(conic.singular);
  ASSERT_TRUE(conic.conic_ngk.has_value());
  EXPECT_EQ(conic.conic_ngk->mode, "exact");
  ASSERT_TRUE(conic.nilpotent_rot.has_value());
  EXPECT_TRUE(*conic.nilpotent_rot);
  const PointReport fiber = analyze_point(worked_eta(), pt({1, 1, 1, 2}));
  EXPECT_TRUE(fiber.kupka);
}
