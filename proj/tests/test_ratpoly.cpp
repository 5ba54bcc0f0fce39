#include <gtest/gtest.h>

#include <random>

#include "foliage/gcd.hpp"
#include "foliage/linalg.hpp"
#include "foliage/modpoly.hpp"
#include "foliage/text.hpp"
#include "oracle.hpp"
#include "foliage_app/random.hpp"

using namespace foliage;

namespace {

Poly P(const char* s, std::size_t n = 3) { return parse_poly(s, n); }

std::vector<Rational> random_point(std::size_t n, std::mt19937_64& rng) {
  std::vector<Rational> p;
  for (std::size_t i = 0; i < n; ++i) {
    p.push_back(Rational(std::uniform_int_distribution<int>(-9, 9)(rng), std::uniform_int_distribution<int>(1, 4)(rng)));
  }
  for (auto& r : p) {
    r.canonicalize();
  }
  return p;
}

}  // namespace

TEST(Poly, GrlexOrderingIsDescending) {
  const Poly p = P("x2^3 + x0*x1 + x0^2 + 1 + x1^2");
  ASSERT_EQ(p.size(), 5u);
  EXPECT_EQ(to_string(p), "x2^3 + x0^2 + x0*x1 + x1^2 + 1");
  for (std::size_t i = 1; i < p.size(); ++i) {
    EXPECT_TRUE(grlex_greater(p.terms()[i - 1].mono, p.terms()[i].mono));
  }
}

TEST(Poly, ArithmeticAgreesWithEvaluation) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const Poly a = app::random_poly(3, 3, 5, rng);
    const Poly b = app::random_poly(3, 3, 5, rng);
    const auto x = random_point(3, rng);
    EXPECT_EQ(eval(a + b, x), eval(a, x) + eval(b, x));
    EXPECT_EQ(eval(a - b, x), eval(a, x) - eval(b, x));
    EXPECT_EQ(eval(a * b, x), eval(a, x) * eval(b, x));
    EXPECT_EQ(eval(pow(a, 3), x), eval(a, x) * eval(a, x) * eval(a, x));
  }
}

TEST(Poly, RingAxioms) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Poly a = app::random_poly(4, 2, 4, rng);
    const Poly b = app::random_poly(4, 2, 4, rng);
    const Poly c = app::random_poly(4, 2, 4, rng);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Poly, PartialDerivativeRules) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const Poly a = app::random_poly(3, 3, 4, rng);
    const Poly b = app::random_poly(3, 3, 4, rng);
    for (std::size_t v = 0; v < 3; ++v) {
      EXPECT_EQ(partial(a * b, v), partial(a, v) * b + a * partial(b, v));
    }
    EXPECT_EQ(partial(partial(a, 0), 1), partial(partial(a, 1), 0));
  }
}

TEST(Poly, EulerRelationForHomogeneous) {
  std::mt19937_64 rng(17);
  for (unsigned d = 1; d <= 4; ++d) {
    const Poly h = app::random_homogeneous(3, d, 6, rng);
    Poly lhs(3);
    for (std::size_t v = 0; v < 3; ++v) {
      lhs += Poly::variable(3, v) * partial(h, v);
    }
    EXPECT_EQ(lhs, Rational(d) * h);
    const auto hd = homogeneous_degree(h);
    ASSERT_TRUE(hd.has_value());
    EXPECT_EQ(std::get<unsigned>(*hd), d);
  }
  EXPECT_FALSE(homogeneous_degree(P("x0 + x1^2")).has_value());
}

TEST(Poly, TranslateAndCompose) {
  std::mt19937_64 rng(19);
  const Poly p = app::random_poly(3, 3, 6, rng);
  const std::vector<Rational> s{Rational(1), Rational(-2), Rational(1, 3)};
  const std::vector<Rational> minus{Rational(-1), Rational(2), Rational(-1, 3)};
  EXPECT_EQ(translate(translate(p, s), minus), p);
  const auto x = random_point(3, rng);
  std::vector<Rational> shifted;
  for (std::size_t i = 0; i < 3; ++i) {
    shifted.push_back(x[i] + s[i]);
  }
  EXPECT_EQ(eval(translate(p, s), x), eval(p, shifted));
  const std::vector<Poly> subs{P("x1 + x2"), P("x0*x2"), P("1 - x0")};
  std::vector<Rational> image;
  for (const Poly& q : subs) {
    image.push_back(eval(q, x));
  }
  EXPECT_EQ(eval(compose(p, subs), x), eval(p, image));
}

TEST(Poly, HomogeneousSlicesSumToWhole) {
  const Poly p = P("x0^3 - 2*x0*x1 + x2 + 5");
  Poly sum(3);
  for (unsigned d = 0; d <= 3; ++d) {
    sum += homogeneous_slice(p, d);
  }
  EXPECT_EQ(sum, p);
  EXPECT_EQ(truncate(p, 1), P("x2 + 5"));
}

TEST(Poly, ExactDivision) {
  const Poly a = P("x0^2 - x1^2");
  const auto q = divide_exact(a, P("x0 - x1"));
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, P("x0 + x1"));
  EXPECT_FALSE(divide_exact(a, P("x0 - x2")).has_value());
}

TEST(Gcd, RecoversPlantedFactor) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 15; ++trial) {
    const Poly g = app::random_poly(3, 2, 3, rng);
    const Poly u = app::random_poly(3, 2, 3, rng);
    const Poly v = app::random_poly(3, 2, 3, rng);
    if (g.is_zero() || u.is_zero() || v.is_zero() || g.is_constant()) {
      continue;
    }
    const Poly a = g * u;
    const Poly b = g * v;
    const Poly h = gcd_multivar(a, b);
    // Oracle: h divides both inputs and the planted factor divides h.
    ASSERT_TRUE(divide_exact(a, h).has_value());
    ASSERT_TRUE(divide_exact(b, h).has_value());
    EXPECT_TRUE(divide_exact(h, g).has_value()) << to_string(g) << " vs " << to_string(h);
  }
}

TEST(Gcd, CoprimeInputsGiveConstant) {
  EXPECT_TRUE(gcd_multivar(P("x0^2 + x1"), P("x1^3 - x2")).is_constant());
  EXPECT_EQ(make_monic(gcd_multivar(P("x0*x1"), P("x0*x2"))), P("x0"));
  const std::vector<Poly> polys{P("x0*x1*x2"), P("x0^2*x2"), P("x0*x2^2")};
  EXPECT_EQ(make_monic(gcd_all(polys)), P("x0*x2"));
}

TEST(Resultant, MatchesSylvesterDeterminantAfterSpecialization) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const Poly a = app::random_poly(2, 3, 4, rng) + P("x1^3", 2);
    const Poly b = app::random_poly(2, 2, 4, rng) + P("x1^2", 2);
    const Poly r = resultant(a, b, 1);
    for (int k = 0; k < 3; ++k) {
      const Rational x0(std::uniform_int_distribution<int>(-5, 5)(rng));
      oracle::Dense da(a.degree_in(1) + 1, Rational(0));
      oracle::Dense db(b.degree_in(1) + 1, Rational(0));
      const auto power = [&](unsigned e) {
        Rational out = 1;
        for (unsigned i = 0; i < e; ++i) {
          out *= x0;
        }
        return out;
      };
      for (const Term& t : a.terms()) {
        da[t.mono[1]] += t.coeff * power(t.mono[0]);
      }
      for (const Term& t : b.terms()) {
        db[t.mono[1]] += t.coeff * power(t.mono[0]);
      }
      const std::vector<Rational> pt{x0, Rational(0)};
      EXPECT_EQ(eval(r, pt), oracle::sylvester_resultant(da, db));
    }
  }
}

TEST(Resultant, VanishesOnCommonRoot) {
  const Poly a = P("x1^2 - x0", 2);
  const Poly b = P("x1 - x0", 2);
  // Common roots at x0 in {0, 1}.
  const Poly r = resultant(a, b, 1);
  EXPECT_EQ(eval(r, std::vector<Rational>{0, 0}), 0);
  EXPECT_EQ(eval(r, std::vector<Rational>{1, 0}), 0);
  EXPECT_NE(eval(r, std::vector<Rational>{2, 0}), 0);
}

TEST(Linalg, DeterminantAgreesWithCofactorExpansion) {
  std::mt19937_64 rng(31);
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
    for (auto& row : rows) {
      for (auto& e : row) {
        e = oracle::small(rng, 4);
      }
    }
    EXPECT_EQ(determinant(Matrix::from_rows(rows)), oracle::det(rows));
  }
}

TEST(Linalg, RankNullspaceSolve) {
  const Matrix m = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  EXPECT_EQ(rank_bareiss(m), 2u);
  EXPECT_EQ(rank_minors(m), 2u);
  const auto ns = nullspace(m);
  ASSERT_EQ(ns.size(), 1u);
  for (std::size_t r = 0; r < 3; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < 3; ++c) {
      acc += m(r, c) * ns[0][c];
    }
    EXPECT_EQ(acc, 0);
  }
  const auto x = solve(Matrix::from_rows({{2, 1}, {1, 3}}), {3, 4});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], 1);
  EXPECT_EQ((*x)[1], 1);
  EXPECT_FALSE(solve(m, {1, 0, 0}).has_value());
}

TEST(Linalg, CharacteristicPolynomialAndNilpotency) {
  const Matrix m = Matrix::from_rows({{1, -1}, {1, 1}});
  const auto cp = characteristic_polynomial(m);
  // lambda^2 - 2 lambda + 2, lowest degree first.
  ASSERT_EQ(cp.size(), 3u);
  EXPECT_EQ(cp[0], 2);
  EXPECT_EQ(cp[1], -2);
  EXPECT_EQ(cp[2], 1);
  EXPECT_EQ(trace(m), 2);
  EXPECT_TRUE(is_nilpotent(Matrix::from_rows({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}})));
  EXPECT_FALSE(is_nilpotent(m));
}

TEST(ModArithmetic, FieldOperations) {
  const ModField f(kDefaultPrime);
  EXPECT_TRUE(is_prime_u64(kDefaultPrime));
  EXPECT_TRUE(is_prime_u64(kPrime62));
  EXPECT_FALSE(is_prime_u64(kDefaultPrime - 2));
  std::mt19937_64 rng(37);
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t a = f.uniform(rng);
    if (a != 0) {
      EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
    }
  }
  EXPECT_EQ(f.reduce(Rational(1, 2)), f.inv(2));
  EXPECT_EQ(f.reduce(Rational(-1)), kDefaultPrime - 1);
}

TEST(ModArithmetic, ReductionCommutesWithEvaluation) {
  std::mt19937_64 rng(41);
  const ModField f(kPrime62);
  for (int trial = 0; trial < 20; ++trial) {
    const Poly p = app::random_poly(3, 4, 6, rng);
    const auto x = random_point(3, rng);
    std::vector<std::uint64_t> xm;
    for (const auto& r : x) {
      xm.push_back(f.reduce(r));
    }
    EXPECT_EQ(eval_mod(reduce_mod(p, kPrime62), xm), f.reduce(eval(p, x)));
    EXPECT_EQ(eval_mod(p, xm, f), f.reduce(eval(p, x)));
  }
}

TEST(ModArithmetic, IdentityTesting) {
  std::mt19937_64 rng(43);
  const Poly a = P("x0 + x1") * P("x0 + x1");
  EXPECT_TRUE(identity_test_prob(a, P("x0^2 + 2*x0*x1 + x1^2"), kDefaultPrime, 2, rng));
  EXPECT_FALSE(identity_test_prob(a, P("x0^2 + x1^2"), kDefaultPrime, 2, rng));
}

TEST(ModArithmetic, RankModMatchesExactRank) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::vector<Rational>> rows(4, std::vector<Rational>(5));
    for (auto& row : rows) {
      for (auto& e : row) {
        e = oracle::small(rng, 2);
      }
    }
    rows[3] = rows[0];
    const ModField f(kPrime62);
    std::vector<std::vector<std::uint64_t>> mrows;
    for (const auto& row : rows) {
      std::vector<std::uint64_t> r;
      for (const auto& e : row) {
        r.push_back(f.reduce(e));
      }
      mrows.push_back(r);
    }
    EXPECT_EQ(rank_mod(mrows, kPrime62), rank_bareiss(Matrix::from_rows(rows)));
  }
}
