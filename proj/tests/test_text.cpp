#include <gtest/gtest.h>

#include <random>

#include "foliage/text.hpp"
#include "foliage_app/random.hpp"

using namespace foliage;

TEST(Parse, PolynomialRoundTrip) {
  const Poly p = parse_poly("x0^2*x1 - 3/2*x2^3");
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(p.nvars(), 3u);
  EXPECT_EQ(to_string(p), "x0^2*x1 - 3/2*x2^3");
  EXPECT_EQ(to_string(parse_poly(to_string(p))), to_string(p));
}

TEST(Parse, CanonicalPrinting) {
  EXPECT_EQ(to_string(parse_poly("1*x0 + 0*x1 + 2")), "x0 + 2");
  EXPECT_EQ(to_string(parse_poly("4/6*x0")), "2/3*x0");
  EXPECT_EQ(to_string(parse_poly("x1 - x1")), "0");
  EXPECT_EQ(to_string(parse_poly("x1*x0*x0")), "x0^2*x1");
}

TEST(Parse, FormNormalization) {
  EXPECT_EQ(to_string(parse_form("(x0)*dx1^dx0")), "-(x0)*dx0^dx1");
  EXPECT_EQ(to_string(parse_form("dx0^dx1 + dx0^dx1")), "(2)*dx0^dx1");
  EXPECT_TRUE(parse_form("(x0)*dx0^dx0", 2).is_zero());
  EXPECT_EQ(parse_form("0", 3, 2).degree(), 2u);
  EXPECT_EQ(to_string(parse_form("0", 3, 1)), "0");
}

TEST(Parse, VectorField) {
  const PVec v = parse_vector_field("(x1)*d/dx0 - (x0)*d/dx1", 2);
  EXPECT_EQ(v[0], parse_poly("x1", 2));
  EXPECT_EQ(v[1], parse_poly("-x0", 2));
  EXPECT_EQ(to_string(parse_vector_field(to_string(v), 2)), to_string(v));
}

TEST(Parse, ErrorsCarryPositions) {
  try {
    parse_poly("x0^");
    FAIL() << "accepted malformed input";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 4u);
    EXPECT_FALSE(e.expected().empty());
  }
  try {
    parse_poly("x0 +\n  x1 ** 2");
    FAIL() << "accepted malformed input";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 7u);
  }
}

TEST(Parse, UnknownVariableAndArity) {
  EXPECT_THROW(parse_poly("x5", 3), ParseError);
  EXPECT_THROW(parse_form("dx0 + dx0^dx1", 2), ParseError);
  EXPECT_THROW(parse_form("0", 3), std::invalid_argument);
  EXPECT_THROW(parse_poly("2x0"), ParseError);
  EXPECT_THROW(parse_poly("1/0"), ParseError);
}

TEST(Parse, RandomRoundTrips) {
  std::mt19937_64 rng(211);
  for (int i = 0; i < 100; ++i) {
    const Poly p = app::random_poly(4, 4, 6, rng);
    const std::string s = to_string(p);
    EXPECT_EQ(to_string(parse_poly(s, 4)), s);
    EXPECT_EQ(parse_poly(s, 4), p);
    const PForm a = app::random_form(4, static_cast<std::size_t>(i % 4), 2, rng);
    const std::string t = to_string(a);
    EXPECT_EQ(to_string(parse_form(t, 4, a.degree())), t);
    EXPECT_EQ(parse_form(t, 4, a.degree()), a);
  }
}
