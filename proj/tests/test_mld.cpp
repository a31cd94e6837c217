#include <gtest/gtest.h>

#include "mldn/family.hpp"
#include "mldn/mld.hpp"
#include "support/oracles.hpp"

using namespace mldn;
using mldn::oracles::Rng;

namespace {

NewtonPolygon gamma_of_single(std::vector<LatticePoint> gens, Rat exponent) {
  return weighted_minkowski_sum(RIdeal{{Factor{MonomialIdeal{std::move(gens)}, std::move(exponent)}}});
}

const NewtonPolygon& ex15() {
  static const NewtonPolygon p = gamma_of_single({{4, 0}, {0, 1}}, Rat(5, 4));
  return p;
}
const NewtonPolygon& ex16() {
  static const NewtonPolygon p = gamma_of_single({{3, 0}, {0, 2}}, Rat(1));
  return p;
}
const NewtonPolygon& maximal() {
  static const NewtonPolygon p = gamma_of_single({{1, 0}, {0, 1}}, Rat(1));
  return p;
}

}  // namespace

TEST(Divisor, Basics) {
  Divisor d{2, 5};
  EXPECT_EQ(d.logdisc(), 7);
  EXPECT_EQ(d.swapped(), (Divisor{5, 2}));
  EXPECT_LT((Divisor{1, 9}), (Divisor{2, 1}));
}

TEST(MldValue, FiniteAndMinusInfinity) {
  EXPECT_EQ(MldValue::finite(Rat(1, 2)).str(), "1/2");
  EXPECT_EQ(MldValue::minus_infinity().str(), "-inf");
  EXPECT_FALSE(MldValue::minus_infinity().is_finite());
  EXPECT_THROW(MldValue::finite(Rat(-1)), Error);
  EXPECT_THROW(MldValue::minus_infinity().value(), Error);
}

TEST(LogDiscrepancy, Examples) {
  EXPECT_EQ(log_discrepancy(ex15(), {1, 4}), 0);
  EXPECT_EQ(log_discrepancy(ex16(), {2, 3}), -1);
  EXPECT_EQ(log_discrepancy(maximal(), {1, 1}), 1);
}

TEST(LogDiscrepancy, RejectsAxisDivisors) {
  EXPECT_THROW(log_discrepancy(maximal(), {0, 1}), Error);
  EXPECT_THROW(log_discrepancy(maximal(), {1, 0}), Error);
}

TEST(LogDiscrepancy, HomogeneousInP) {
  Rng rng(41);
  for (int i = 0; i < 500; ++i) {
    auto poly = weighted_minkowski_sum(oracles::random_rideal(rng, 3, 4, 8, 6));
    Divisor p{rng.uniform(1, 20), rng.uniform(1, 20)};
    auto k = rng.uniform(1, 9);
    EXPECT_EQ(log_discrepancy(poly, {k * p.x, k * p.y}), k * log_discrepancy(poly, p));
  }
}

TEST(LogDiscrepancy, ScaledEvaluatorMatchesExact) {
  Rng rng(42);
  for (int i = 0; i < 300; ++i) {
    auto poly = weighted_minkowski_sum(oracles::random_rideal(rng, 3, 4, 12, 6));
    auto fast = detail::ScaledEvaluator::make(poly);
    ASSERT_TRUE(fast.has_value());
    detail::ExactEvaluator exact(poly);
    for (int k = 0; k < 20; ++k) {
      Divisor p{rng.uniform(1, 1000), rng.uniform(1, 1000)};
      EXPECT_EQ(fast->to_rat(fast->value(p)), exact.value(p));
    }
  }
}

TEST(LogDiscrepancy, ScaledEvaluatorDeclinesHugeDenominators) {
  Rat tiny(BigInt(1), BigInt(1) << 70);
  auto poly = NewtonPolygon::from_vertices({{Rat(0), Rat(1) + tiny}, {Rat(3), Rat(0)}});
  EXPECT_FALSE(detail::ScaledEvaluator::make(poly).has_value());
  // The exact path still gives the right answer through the public entry points.
  OracleReport r = brute_force_oracle(poly, 6, 1);
  Rat best = log_discrepancy(poly, r.argmins.front());
  EXPECT_EQ(r.min_value, best);
}

TEST(LogDiscrepancy, ToBig) {
  EXPECT_EQ(detail::to_big(0), 0);
  EXPECT_EQ(detail::to_big(-1), -1);
  EXPECT_EQ(detail::to_big(__int128{1} << 100), BigInt(1) << 100);
  EXPECT_EQ(detail::to_big(-(__int128{1} << 100) - 7), -(BigInt(1) << 100) - 7);
  __int128 lowest = -(__int128{1} << 126) * 2;
  EXPECT_EQ(detail::to_big(lowest), -(BigInt(1) << 127));
}

TEST(Oracle, Examples) {
  OracleReport a = brute_force_oracle(maximal(), 6);
  EXPECT_EQ(a.min_value, 1);
  EXPECT_EQ(a.argmins, (std::vector<Divisor>{Divisor{1, 1}}));
  EXPECT_FALSE(a.any_negative);

  OracleReport b = brute_force_oracle(ex15(), 5);
  EXPECT_EQ(b.min_value, 0);
  EXPECT_EQ(b.argmins, (std::vector<Divisor>{Divisor{1, 4}}));
  EXPECT_FALSE(b.any_negative);

  OracleReport c = brute_force_oracle(ex16(), 5);
  EXPECT_EQ(c.min_value, -1);
  EXPECT_EQ(c.argmins, (std::vector<Divisor>{Divisor{2, 3}}));
  EXPECT_TRUE(c.any_negative);
}

TEST(Oracle, MaximalIdealValueIsMaxCoordinate) {
  OracleReport r = brute_force_oracle(maximal(), 12);
  EXPECT_EQ(r.radius, 12);
  for (std::int64_t x = 1; x < 12; ++x)
    for (std::int64_t y = 1; x + y <= 12; ++y) EXPECT_EQ(log_discrepancy(maximal(), {x, y}), std::max(x, y));
}

TEST(Oracle, RadiusErrors) {
  try {
    brute_force_oracle(maximal(), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::RadiusTooSmall);
  }
  EXPECT_THROW(minimal_computing_logdisc(maximal(), 0), Error);
}

TEST(Oracle, AgreesWithDirectEnumeration) {
  Rng rng(43);
  for (int i = 0; i < 100; ++i) {
    auto poly = weighted_minkowski_sum(oracles::random_rideal(rng, 3, 4, 8, 6));
    std::int64_t radius = rng.uniform(2, 30);
    OracleReport r = brute_force_oracle(poly, radius, 1);
    std::optional<Rat> best;
    std::vector<Divisor> args;
    bool neg = false;
    for (std::int64_t x = 1; x < radius; ++x)
      for (std::int64_t y = 1; x + y <= radius; ++y) {
        Rat v = Rat(x + y) - support(poly, Rat(x), Rat(y));
        neg = neg || v < 0;
        if (!best || v < *best) {
          best = v;
          args = {Divisor{x, y}};
        } else if (v == *best) {
          args.push_back({x, y});
        }
      }
    EXPECT_EQ(r.min_value, *best);
    EXPECT_EQ(r.argmins, args);
    EXPECT_EQ(r.any_negative, neg);
  }
}

TEST(Oracle, IndependentOfWorkerCount) {
  InstanceSampler sampler(44);
  for (int i = 0; i < 40; ++i) {
    auto poly = weighted_minkowski_sum(sampler.next().rideal);
    OracleReport one = brute_force_oracle(poly, 150, 1);
    for (unsigned w : {2u, 3u, 8u}) {
      OracleReport many = brute_force_oracle(poly, 150, w);
      EXPECT_EQ(many.min_value, one.min_value);
      EXPECT_EQ(many.argmins, one.argmins);
      EXPECT_EQ(many.any_negative, one.any_negative);
    }
  }
}

TEST(MinimalComputing, Examples) {
  ComputingDivisor a = minimal_computing_logdisc(ex15(), 5);
  EXPECT_EQ(a.logdisc, 5);
  EXPECT_EQ(a.divisor, (Divisor{1, 4}));
  ComputingDivisor b = minimal_computing_logdisc(ex16(), 5);
  EXPECT_EQ(b.logdisc, 5);
  EXPECT_EQ(b.divisor, (Divisor{2, 3}));
  ComputingDivisor c = minimal_computing_logdisc(maximal(), 2);
  EXPECT_EQ(c.logdisc, 2);
  EXPECT_EQ(c.divisor, (Divisor{1, 1}));
}

TEST(MinimalComputing, RadiusTooShort) {
  try {
    minimal_computing_logdisc(ex16(), 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NoComputingDivisorInRadius);
  }
}

TEST(MinimalComputing, StableInRadius) {
  // Once the radius reaches the answer, enlarging it changes nothing.
  for (auto* poly : {&ex15(), &ex16()}) {
    ComputingDivisor base = minimal_computing_logdisc(*poly, 5);
    for (std::int64_t r = 6; r <= 40; r += 7) {
      ComputingDivisor wider = minimal_computing_logdisc(*poly, r);
      EXPECT_EQ(wider.logdisc, base.logdisc);
      EXPECT_EQ(wider.divisor, base.divisor);
    }
  }
}

TEST(BoxMinimum, TieBreaksBySumThenLex) {
  BoxMinimum b = box_minimum(maximal(), 4, 4);
  EXPECT_EQ(b.value, 1);
  EXPECT_EQ(b.divisor, (Divisor{1, 1}));
  auto flat = gamma_of_single({{0, 1}}, Rat(1));  // a(E_p) = p_x, so a whole column ties
  BoxMinimum f = box_minimum(flat, 3, 5);
  EXPECT_EQ(f.value, 1);
  EXPECT_EQ(f.divisor, (Divisor{1, 1}));
  EXPECT_THROW(box_minimum(flat, 0, 3), Error);
}

TEST(WorkerCount, ReadsEnvironment) {
  setenv("MLD_NEWTON_THREADS", "3", 1);
  EXPECT_EQ(worker_count(), 3u);
  setenv("MLD_NEWTON_THREADS", "zero", 1);
  EXPECT_GE(worker_count(), 1u);
  unsetenv("MLD_NEWTON_THREADS");
  EXPECT_GE(worker_count(), 1u);
}
