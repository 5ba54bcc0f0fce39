#include <gtest/gtest.h>

#include "foliage/ratmap.hpp"
#include "foliage/text.hpp"
#include "foliage_app/catalog.hpp"

using namespace foliage;

namespace {

Point pt(std::initializer_list<long> xs) {
  Point p;
  for (long x : xs) {
    p.emplace_back(x);
  }
  return p;
}

}  // namespace

TEST(RationalMap, ValidationRejectsCommonFactor) {
  const RationalMap bad =
      make_rational_map({parse_poly("x0*x1", 4), parse_poly("x0*x2", 4), parse_poly("x0*x3", 4)});
  const auto err = validation_error(bad);
  ASSERT_TRUE(err.has_value());
  EXPECT_NE(err->find("x0"), std::string::npos);
  EXPECT_FALSE(validate(bad));
  EXPECT_TRUE(validate(app::binomial_map(2)));
  EXPECT_TRUE(validation_error(make_rational_map({parse_poly("x0^2", 3), parse_poly("x1", 3)})).has_value());
}

TEST(RationalMap, EvaluationAndIndeterminacy) {
  const RationalMap f = app::binomial_map(2);
  EXPECT_EQ(evaluate(f, pt({1, 1, 1, 2})), pt({0, 0, 3}));
  EXPECT_TRUE(is_indeterminacy_point(f, pt({1, -1, 1, -1})));
  EXPECT_FALSE(is_indeterminacy_point(f, pt({1, 1, 1, 2})));
  EXPECT_TRUE(projectively_equal(pt({1, 2, 3}), pt({-2, -4, -6})));
  EXPECT_FALSE(projectively_equal(pt({1, 2, 3}), pt({1, 2, 4})));
}

TEST(RationalMap, JacobianOracle) {
  const RationalMap f = app::binomial_map(2);
  const Matrix j = jacobian_at(f, pt({1, 2, 3, 4}));
  // dF_k = 2 x_{k+1} dx_{k+1} - 2 x0 dx0.
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_EQ(j(k, 0), -2);
    EXPECT_EQ(j(k, k + 1), 2 * (static_cast<long>(k) + 2));
  }
}

TEST(RationalMap, QuadricWitnessesAreComplete) {
  const RationalMap f = app::binomial_map(2);
  const auto w = binomial_family_witnesses(f);
  ASSERT_TRUE(w.has_value());
  ASSERT_EQ(w->size(), 8u);
  for (const Point& p : *w) {
    EXPECT_TRUE(is_indeterminacy_point(f, p));
    EXPECT_TRUE(is_generic_at(f, p));
  }
  const WitnessReport r = indeterminacy_witness_check(f, *w);
  EXPECT_EQ(r.count, 8u);
  EXPECT_EQ(r.bezout_bound, 8u);
  EXPECT_TRUE(r.complete);
  EXPECT_TRUE(r.all_generic);
  EXPECT_EQ(r.status, "complete by Bezout");
}

TEST(RationalMap, CubicWitnessesArePartial) {
  const RationalMap f = app::binomial_map(3);
  const auto w = binomial_family_witnesses(f);
  ASSERT_TRUE(w.has_value());
  ASSERT_EQ(w->size(), 1u);
  const WitnessReport r = indeterminacy_witness_check(f, *w);
  EXPECT_EQ(r.bezout_bound, 27u);
  EXPECT_FALSE(r.complete);
  EXPECT_EQ(r.status, "partial witnesses: 1 of 27 witnessed");
}

TEST(RationalMap, WitnessCheckRejectsBadInput) {
  const RationalMap f = app::binomial_map(2);
  EXPECT_THROW(indeterminacy_witness_check(f, {pt({1, 1, 1, 1}), pt({2, 2, 2, 2})}), std::invalid_argument);
  EXPECT_THROW(indeterminacy_witness_check(f, {pt({1, 1, 1, 2})}), std::invalid_argument);
  EXPECT_THROW(is_generic_at(f, pt({1, 1, 1, 2})), std::invalid_argument);
}

TEST(RationalMap, NonGenericIndeterminacy) {
  // (x1^2, x2^2, x3^2 - x0^2) meets I(f) non-transversally at [1:0:0:1].
  const RationalMap f =
      make_rational_map({parse_poly("x1^2", 4), parse_poly("x2^2", 4), parse_poly("x3^2 - x0^2", 4)});
  EXPECT_TRUE(is_indeterminacy_point(f, pt({1, 0, 0, 1})));
  EXPECT_FALSE(is_generic_at(f, pt({1, 0, 0, 1})));
}

TEST(RationalMap, FibersAndCriticalPoints) {
  const RationalMap f = app::binomial_map(2);
  EXPECT_TRUE(fiber_membership(f, pt({1, 1, 1, 2}), pt({0, 0, 1})));
  EXPECT_TRUE(fiber_membership(f, pt({1, 1, 1, 3}), pt({0, 0, 5})));
  EXPECT_FALSE(fiber_membership(f, pt({1, 1, 2, 2}), pt({0, 0, 1})));
  // Affine differential in x0 = 1 has rows 2 x_{k+1} e_{k+1} (up to the
  // target chart): rank drops when two of x1, x2, x3 vanish.
  EXPECT_FALSE(is_critical_point(f, pt({1, 1, 1, 2}), 0));
  EXPECT_TRUE(is_critical_point(f, pt({1, 0, 0, 2}), 0));
  EXPECT_THROW(is_critical_point(f, pt({1, 1, 1, 1}), 0), std::invalid_argument);
}
