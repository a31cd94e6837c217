#include <gtest/gtest.h>

#include <sstream>

#include "mldn/geom.hpp"
#include "mldn/rat.hpp"
#include "support/oracles.hpp"

using namespace mldn;
using mldn::oracles::Rng;

namespace {

Point pt(const char* x, const char* y) { return {parse_rat(x), parse_rat(y)}; }

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return Errc::InvariantViolation;
}

}  // namespace

TEST(Rat, ParseAndPrintReduced) {
  EXPECT_EQ(parse_rat("6/4"), Rat(3, 2));
  EXPECT_EQ(to_string(parse_rat("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rat("8/4")), "2");
  EXPECT_EQ(to_string(parse_rat("-3")), "-3");
  EXPECT_EQ(parse_rat("6/-4"), Rat(-3, 2));
  EXPECT_EQ(den(parse_rat("6/-4")), 2);
}

TEST(Rat, ParseBigValuesExactly) {
  Rat r = parse_rat("123456789012345678901234567890/3");
  EXPECT_EQ(r * 3, Rat(BigInt("123456789012345678901234567890")));
}

TEST(Rat, ParseRejectsGarbage) {
  for (const char* bad : {"", "1.5", "1/0", "/3", "3/", "a", "1/2/3", "--1", "1e3"})
    EXPECT_EQ(code_of([&] { parse_rat(bad); }), Errc::Parse) << bad;
}

TEST(Rat, FloorCeilInt) {
  EXPECT_EQ(floor_int(Rat(7, 2)), 3);
  EXPECT_EQ(ceil_int(Rat(7, 2)), 4);
  EXPECT_EQ(floor_int(Rat(-7, 2)), -4);
  EXPECT_EQ(ceil_int(Rat(-7, 2)), -3);
  EXPECT_EQ(floor_int(Rat(4)), 4);
  EXPECT_EQ(ceil_int(Rat(-4)), -4);
}

TEST(Rat, CheckedInt64) {
  EXPECT_EQ(checked_int64(BigInt(42), "x"), 42);
  BigInt huge = BigInt(1) << 70;
  EXPECT_EQ(code_of([&] { checked_int64(huge, "x"); }), Errc::Overflow);
  EXPECT_FALSE(to_int64(huge).has_value());
}

TEST(Geom, LineSideExamples) {
  EXPECT_EQ(line_side(pt("0", "2"), pt("3", "0"), pt("1", "1")), LineSide::Minus);
  EXPECT_EQ(line_side(pt("1", "0"), pt("0", "1"), pt("1", "1")), LineSide::Plus);
  EXPECT_EQ(line_side(pt("0", "5/4"), pt("5", "0"), pt("1", "1")), LineSide::On);
}

TEST(Geom, LineSideErrors) {
  EXPECT_EQ(code_of([] { line_side(pt("1", "1"), pt("1", "1"), pt("0", "0")); }), Errc::DegenerateLine);
  EXPECT_EQ(code_of([] { line_side(pt("1", "0"), pt("1", "3"), pt("0", "0")); }), Errc::VerticalLine);
}

TEST(Geom, LineSideIndependentOfOrientation) {
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    Point a{rng.rational(0, 5, 7), rng.rational(0, 5, 7)};
    Point b{rng.rational(0, 5, 7), rng.rational(0, 5, 7)};
    if (a.x == b.x) continue;
    Point q{rng.rational(0, 5, 7), rng.rational(0, 5, 7)};
    EXPECT_EQ(line_side(a, b, q), line_side(b, a, q));
  }
}

TEST(Geom, LineSidePerturbationAntisymmetric) {
  Rng rng(12);
  for (int i = 0; i < 1000; ++i) {
    Point a{rng.rational(0, 5, 7), rng.rational(0, 5, 7)};
    Point b{rng.rational(0, 5, 7), rng.rational(0, 5, 7)};
    if (a.x == b.x) continue;
    Rat t = rng.rational(0, 1, 9);
    Point on{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
    Rat eps = rng.positive_rational(1, 9);
    EXPECT_EQ(line_side(a, b, on), LineSide::On);
    EXPECT_EQ(line_side(a, b, {on.x, on.y + eps}), LineSide::Plus);
    EXPECT_EQ(line_side(a, b, {on.x, on.y - eps}), LineSide::Minus);
  }
}

TEST(Geom, InTriangle) {
  EXPECT_TRUE(in_triangle(pt("1", "1")));
  EXPECT_TRUE(in_triangle(pt("0", "5/4")));
  EXPECT_FALSE(in_triangle(pt("3", "0")));
}

TEST(Geom, FloorCeilLambdaExamples) {
  EXPECT_EQ(floor_lambda(Rat(5, 3), Rat(1, 2)), Rat(3, 2));
  EXPECT_EQ(ceil_lambda(Rat(5, 4), Rat(5, 4)), Rat(5, 4));
  EXPECT_EQ(floor_lambda(Rat(2), Rat(1, 2)), Rat(2));
}

TEST(Geom, FloorCeilLambdaRejectNonPositive) {
  EXPECT_EQ(code_of([] { floor_lambda(Rat(1), Rat(0)); }), Errc::NonPositiveLambda);
  EXPECT_EQ(code_of([] { ceil_lambda(Rat(1), Rat(-1, 2)); }), Errc::NonPositiveLambda);
}

TEST(Geom, FloorCeilLambdaIdentities) {
  Rng rng(13);
  for (int i = 0; i < 1000; ++i) {
    Rat a = rng.rational(-6, 6, 12);
    Rat lambda = rng.positive_rational(3, 12);
    Rat f = floor_lambda(a, lambda);
    Rat c = ceil_lambda(a, lambda);
    EXPECT_LE(f, a);
    EXPECT_LT(a, f + lambda);
    EXPECT_LT(c - lambda, a);
    EXPECT_LE(a, c);
    EXPECT_EQ(f / lambda, Rat(floor_int(a / lambda)));
    EXPECT_EQ(c / lambda, Rat(ceil_int(a / lambda)));
    EXPECT_TRUE(is_integer(f / lambda));
    EXPECT_TRUE(is_integer(c / lambda));
  }
}

TEST(Geom, FloorMonotoneOnMultiples) {
  for (std::int64_t k = 1; k <= 8; ++k) {
    Rat lambda(1, k);
    std::vector<Rat> grid;
    for (std::int64_t n = 1; Rat(n, k) <= 2; ++n)
      if (Rat(n, k) > 1) grid.emplace_back(n, k);
    for (const auto& a : grid)
      for (const auto& b : grid) {
        if (a > b) continue;
        EXPECT_GE(floor_lambda(a / (a - 1), lambda) + a, floor_lambda(b / (b - 1), lambda) + b)
            << "lambda=" << lambda << " a=" << a << " b=" << b;
      }
  }
}

TEST(Geom, PointOrderAndSwap) {
  EXPECT_TRUE(lex_less(pt("0", "3"), pt("1", "0")));
  EXPECT_TRUE(lex_less(pt("1", "0"), pt("1", "1")));
  EXPECT_EQ(swapped(pt("1/2", "3")), pt("3", "1/2"));
  std::ostringstream os;
  os << pt("1/2", "3") << ' ' << LineSide::On;
  EXPECT_FALSE(os.str().empty());
}
