#include <gtest/gtest.h>

#include <random>

#include "foliage/foliation.hpp"
#include "foliage/text.hpp"
#include "foliage_app/catalog.hpp"
#include "foliage_app/random.hpp"

using namespace foliage;
using app::binomial_map;
using app::reference_foliation;

namespace {

const CheckMode kProb = CheckMode::prob(kPrime62, 2);

}  // namespace

class PullbackDegree : public ::testing::TestWithParam<std::pair<unsigned, unsigned>> {};

TEST_P(PullbackDegree, MatchesPrediction) {
  const auto [nu, d] = GetParam();
  const FoliationQ q = pullback_foliation(binomial_map(nu), reference_foliation(d));
  EXPECT_EQ(q.n, 3u);
  EXPECT_EQ(q.q, 1u);
  EXPECT_EQ(q.removed_degree, 0u);
  EXPECT_EQ(static_cast<long>(q.theta), static_cast<long>((d + 2) * nu) - 2);
  EXPECT_EQ(degree_of(q.eta), q.theta);
  EXPECT_EQ(pullback_form_by_expansion(binomial_map(nu), reference_foliation(d)), q.eta);
}

INSTANTIATE_TEST_SUITE_P(Table, PullbackDegree,
                         ::testing::Values(std::pair{2u, 2u}, std::pair{2u, 3u}, std::pair{3u, 2u},
                                           std::pair{3u, 3u}));

TEST(Foliation, IdentityMapPullbackKeepsDegree) {
  const RationalMap id = make_rational_map({parse_poly("x0", 3), parse_poly("x1", 3), parse_poly("x2", 3)});
  for (unsigned d : {2u, 3u}) {
    const FoliationQ q = pullback_foliation(id, reference_foliation(d));
    EXPECT_EQ(q.theta, d);
    EXPECT_EQ(q.eta, omega_from_1d(reference_foliation(d)));
  }
}

TEST(Foliation, RadialMultipleIsRemoved) {
  // X + h R defines the same foliation: Omega is unchanged.
  const Foliation1D g = app::hyperbolic_quadratic_foliation();
  const PVec shifted = g.X + parse_poly("x0 - x2", 3) * PVec::radial(3);
  EXPECT_EQ(omega_from_1d(make_foliation_1d(shifted)), omega_from_1d(g));
}

TEST(Foliation, RejectsNonHomogeneousField) {
  EXPECT_THROW(make_foliation_1d(PVec(std::vector<Poly>{parse_poly("x0^2", 3), parse_poly("x1", 3), Poly(3)})),
               std::invalid_argument);
}

TEST(Foliation, StructuralIdentitiesInBothModes) {
  for (const CheckMode& mode : {CheckMode::exact(), kProb}) {
    for (unsigned d : {2u, 3u}) {
      const PForm omega = omega_from_1d(reference_foliation(d));
      EXPECT_TRUE(radial_check(omega, mode));
      EXPECT_TRUE(euler_relation_check(omega, mode));
      EXPECT_TRUE(is_integrable(omega, mode));
    }
    const PForm eta = pullback_foliation(binomial_map(2), reference_foliation(2)).eta;
    EXPECT_TRUE(radial_check(eta, mode));
    EXPECT_TRUE(euler_relation_check(eta, mode));
    EXPECT_TRUE(is_integrable(eta, mode));
  }
}

TEST(Foliation, NonExamplesFail) {
  const PForm sym = app::symplectic_form();
  for (const CheckMode& mode : {CheckMode::exact(), kProb}) {
    EXPECT_FALSE(is_decomposable_everywhere(sym, mode));
    EXPECT_FALSE(is_integrable(sym, mode));
    // x0 dx1 - x1 dx0 + dx2: not radial.
    EXPECT_FALSE(radial_check(parse_form("(x0)*dx1 - (x1)*dx0 + dx2", 3), mode));
    // x1 dx0 + x2 dx1 + x0 dx2 is not Frobenius integrable (a ^ da != 0).
    EXPECT_FALSE(is_integrable(parse_form("(x1)*dx0 + (x2)*dx1 + (x0)*dx2", 3), mode));
  }
}

TEST(Foliation, ProbabilisticAgreesOnRandomForms) {
  std::mt19937_64 rng(307);
  for (int trial = 0; trial < 10; ++trial) {
    const PForm a = app::random_form(4, 2, 2, rng);
    EXPECT_EQ(is_decomposable_everywhere(a), is_decomposable_everywhere(a, kProb));
    EXPECT_EQ(is_integrable(a), is_integrable(a, kProb));
  }
}

TEST(Foliation, QuasiHomogeneousBracket) {
  std::mt19937_64 rng(311);
  for (unsigned d = 1; d <= 3; ++d) {
    for (std::size_t n : {3u, 4u}) {
      const PVec x = app::random_homogeneous_field(n, d, rng);
      EXPECT_EQ(lie_bracket(PVec::radial(n), x), Rational(static_cast<long>(d) - 1) * x);
    }
  }
}

TEST(Foliation, KernelContainsRadialAndField) {
  const Foliation1D g = app::hyperbolic_quadratic_foliation();
  const PForm omega = omega_from_1d(g);
  const Point p{Rational(1), Rational(2), Rational(5)};
  const auto ker = kernel_at(omega, p);
  ASSERT_EQ(ker.size(), 2u);
  // Omega(p) annihilates both R(p) and X(p).
  const PForm at = evaluate_at(omega, p);
  for (const PVec& v : {PVec::radial(3), g.X}) {
    EXPECT_TRUE(evaluate_at(interior_product(v, at), p).is_zero());
  }
}

TEST(Foliation, MakeFoliationQValidates) {
  const PForm omega = omega_from_1d(reference_foliation(2));
  const FoliationQ q = make_foliation_q(omega);
  EXPECT_EQ(q.theta, 2u);
  EXPECT_EQ(q.q, 1u);
  EXPECT_THROW(make_foliation_q(parse_form("(x1)*dx0 + (x2)*dx1 + (x0)*dx2", 3)), std::invalid_argument);
  EXPECT_THROW(make_foliation_q(PForm(3, 1)), std::invalid_argument);
}
