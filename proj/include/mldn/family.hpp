#pragma once

// Instance generators: the two optimal-bound families and a seeded random
// sampler whose output is identical on every platform.
//
// Family ex15(n), n >= 2: (x^{n^2}, y^{n-1})^e with e = 1/(n-1) + 1/n^2;
//   mld 0, computed by (n-1, n^2), every computing divisor has p_x + p_y >= n^2 + n - 1.
// Family ex16(n), n >= 1: (x^{n^2+n+1}, y^{n+1})^{1/n};
//   mld -inf, computed by (n+1, n^2+n+1), every computing divisor has p_x + p_y >= (n+1)^2 + 1.
//
// Random sampler (all draws by rejection from mt19937_64):
//   - 1..3 exponents k/q with q in [1,6] and k in [1,q+1];
//   - 1..3 factors taking exponents from that pool, total exponent <= 5/2;
//   - per factor a cap c <= 12 of roughly 1/(lambda * factors), then 1..4
//     nonzero generators: (a,0), (0,b) or (a,b) with coordinates in [0,c].

#include <cstdint>
#include <random>
#include <string>

#include "mldn/io.hpp"

namespace mldn {

enum class Family { Ex15, Ex16 };

struct Expected {
  std::string mld;
  Divisor witness;
  std::int64_t min_logdisc = 0;
  std::int64_t bound = 0;

  friend bool operator==(const Expected&, const Expected&) = default;
};

inline Json to_json(const Expected& e) {
  return {{"mld", e.mld}, {"witness", to_json(e.witness)}, {"min_logdisc", e.min_logdisc}, {"bound", e.bound}};
}

inline Expected expected_from_json(const Json& j) {
  if (!j.is_object()) detail::bad_field("<root>", "expected an object");
  for (const char* key : {"mld", "witness", "min_logdisc", "bound"})
    if (!j.contains(key)) detail::bad_field(key, "missing");
  Expected out;
  if (!j.at("mld").is_string()) detail::bad_field("mld", "expected a string");
  out.mld = j.at("mld").get<std::string>();
  const Json& w = j.at("witness");
  if (!w.is_array() || w.size() != 2) detail::bad_field("witness", "expected [x, y]");
  out.witness = {detail::int_field(w[0], "witness[0]"), detail::int_field(w[1], "witness[1]")};
  out.min_logdisc = detail::int_field(j.at("min_logdisc"), "min_logdisc");
  out.bound = detail::int_field(j.at("bound"), "bound");
  return out;
}

struct FamilyCase {
  Instance instance;
  Expected expected;
};

inline FamilyCase family_case(Family kind, std::int64_t n) {
  FamilyCase out;
  if (kind == Family::Ex15) {
    if (n < 2) throw Error(Errc::InvariantViolation, "ex15 needs n >= 2");
    Rat e = Rat(1, n - 1) + Rat(1, n * n);
    out.instance.id = "ex15-n" + std::to_string(n);
    out.instance.rideal.factors.push_back({MonomialIdeal{{{n * n, 0}, {0, n - 1}}}, e});
    std::int64_t b = n * n + n - 1;
    out.expected = {"0", Divisor{n - 1, n * n}, b, b};
  } else {
    if (n < 1) throw Error(Errc::InvariantViolation, "ex16 needs n >= 1");
    out.instance.id = "ex16-n" + std::to_string(n);
    out.instance.rideal.factors.push_back({MonomialIdeal{{{n * n + n + 1, 0}, {0, n + 1}}}, Rat(1, n)});
    std::int64_t b = (n + 1) * (n + 1) + 1;
    out.expected = {"-inf", Divisor{n + 1, n * n + n + 1}, b, b};
  }
  return out;
}

class InstanceSampler {
 public:
  explicit InstanceSampler(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  /// Uniform integer in [lo, hi], by rejection on raw engine output so the
  /// sequence does not depend on the standard library's distributions.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    auto range = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t draw;
    do {
      draw = engine_();
    } while (draw >= limit);
    return lo + static_cast<std::int64_t>(draw % range);
  }

  Instance next() {
    Instance inst;
    inst.id = "rand-s" + std::to_string(seed_) + "-" + std::to_string(count_++);
    std::vector<Rat> pool;
    auto pool_size = uniform(1, 3);
    for (std::int64_t i = 0; i < pool_size; ++i) {
      std::int64_t q = uniform(1, 6);
      pool.emplace_back(uniform(1, q + 1), q);
    }
    // Factor count and exponents are redrawn until the exponent total is at
    // most 5/2; a larger total almost always puts Gamma beyond x + y = 2.
    // One factor always qualifies since every pool value is <= 2.
    std::int64_t factors = 0;
    std::vector<Rat> exponents;
    do {
      factors = uniform(1, 3);
      exponents.clear();
      Rat total = 0;
      for (std::int64_t f = 0; f < factors; ++f) {
        exponents.push_back(pool[static_cast<std::size_t>(uniform(0, pool_size - 1))]);
        total += exponents.back();
      }
      if (total <= Rat(5, 2)) break;
    } while (true);
    for (std::int64_t f = 0; f < factors; ++f) {
      Factor factor;
      factor.exponent = exponents[static_cast<std::size_t>(f)];
      // Keep lambda * cap around 1..3 so Gamma tends to pass near (1,1).
      std::int64_t reach = checked_int64(ceil_int(Rat(uniform(2, 4), 2 * factors) / factor.exponent), "cap") + 1;
      std::int64_t cap = uniform(1, std::min<std::int64_t>(12, reach));
      auto gens = uniform(1, 4);
      for (std::int64_t g = 0; g < gens; ++g) {
        LatticePoint pt;
        do {
          switch (uniform(0, 2)) {
            case 0: pt = {uniform(1, cap), 0}; break;
            case 1: pt = {0, uniform(1, cap)}; break;
            default: pt = {uniform(0, cap), uniform(0, cap)}; break;
          }
        } while (pt.x == 0 && pt.y == 0);
        factor.ideal.generators.push_back(pt);
      }
      inst.rideal.factors.push_back(std::move(factor));
    }
    return inst;
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
  std::uint64_t count_ = 0;
};

}  // namespace mldn
