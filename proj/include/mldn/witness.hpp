#pragma once

// Witness divisors computing the mld within the explicit log discrepancy
// bounds, one construction per sign of the mld.
//
// mld >= 0: vertices are split into zones A = [0,1]x(1,inf), B = [0,1]^2 and
// C = (1,inf)x[0,1] (n, m, t vertices). With facet normals b_0 = (1,0) and
// b_k = (0,1) as sentinels, either ratio(b_n) < 1 < ratio(b_{n+m}) and E_(1,1)
// computes the mld, or (after possibly reflecting) ratio(b_n) >= 1 and every
// divisor computing the mld can be moved into the box [1..b'_x] x [1..b'_y],
// where b' is the primitive normal of the facet a_n a_{n+1}.
//
// mld = -inf: the polygon is made convenient, the first facet with 1 strictly
// below it is located inside the triangle y <= 2 - x, and the far endpoint is
// slid toward the near one in steps of lambda while 1 stays below the line.

#include <optional>
#include <variant>

#include "mldn/coeffs.hpp"
#include "mldn/mld.hpp"
#include "mldn/newton.hpp"

namespace mldn {

struct CaseOne {
  friend bool operator==(const CaseOne&, const CaseOne&) = default;
};

struct CaseTwo {
  bool reflected = false;
  std::size_t n = 0;  // zone-A vertex count of the oriented polygon

  friend bool operator==(const CaseTwo&, const CaseTwo&) = default;
};

struct MinusInfinityPath {
  bool reflected = false;
  bool unit_divisor = false;  // <1, Gamma> > 2, so E_(1,1) already has negative value
  std::int64_t convenient_m = 0;

  friend bool operator==(const MinusInfinityPath&, const MinusInfinityPath&) = default;
};

using CaseTag = std::variant<CaseOne, CaseTwo>;
using WitnessPath = std::variant<CaseOne, CaseTwo, MinusInfinityPath>;

struct WitnessResult {
  MldValue mld = MldValue::minus_infinity();
  Divisor divisor;
  std::int64_t logdisc = 0;
  std::int64_t bound = 0;
  WitnessPath path;
};

namespace detail {

[[noreturn]] inline void proof_violation(const std::string& what) {
  throw Error(Errc::ProofInvariantViolated, what);
}

/// Zone-A and zone-B vertex counts; vertices come in order A*, B*, C*.
inline std::pair<std::size_t, std::size_t> zone_counts(const NewtonPolygon& poly) {
  std::size_t n = 0;
  std::size_t m = 0;
  for (const auto& v : poly.vertices()) {
    if (v.x <= 1 && v.y > 1) {
      if (m != 0) proof_violation("zone A vertex after zone B");
      ++n;
    } else if (v.x <= 1 && v.y <= 1) {
      ++m;
    } else if (v.y > 1) {
      proof_violation("vertex in (1,inf)^2 although 1 is in Gamma");
    }
  }
  return {n, m};
}

/// Facet normal b_i for i = 0..k with sentinel directions at both ends.
inline std::pair<Rat, Rat> facet_normal(const NewtonPolygon& poly, std::size_t i) {
  if (i == 0) return {Rat(1), Rat(0)};
  if (i >= poly.size()) return {Rat(0), Rat(1)};
  return Facet{poly.vertices()[i - 1], poly.vertices()[i]}.normal();
}

inline bool ratio_below_one(const std::pair<Rat, Rat>& b) { return b.second < b.first; }
inline bool ratio_above_one(const std::pair<Rat, Rat>& b) { return b.second > b.first; }

inline void require_in_set(const RIdeal& rideal, const CoefficientSet& set) {
  for (const auto& f : rideal.factors)
    if (!set.contains(f.exponent))
      throw Error(Errc::InvariantViolation, "exponent " + to_string(f.exponent) + " is not in the coefficient set");
}

inline GammaResult invariants_for(const RIdeal& rideal, const std::optional<CoefficientSet>& declared) {
  if (declared) {
    require_in_set(rideal, *declared);
    return gamma_of(*declared);
  }
  return gamma_of(rideal.coefficient_set());
}

}  // namespace detail

/// Case split used when 1 is in Gamma.
inline CaseTag classify(const NewtonPolygon& poly) {
  if (!contains_one(poly)) throw Error(Errc::PolygonWithoutOne, "classify needs 1 in Gamma");
  auto [n, m] = detail::zone_counts(poly);
  auto bn = detail::facet_normal(poly, n);
  auto bnm = detail::facet_normal(poly, n + m);
  if (detail::ratio_below_one(bn) && detail::ratio_above_one(bnm)) return CaseOne{};
  if (!detail::ratio_below_one(bn)) {
    if (n == 0) detail::proof_violation("case two with no zone-A vertex");
    return CaseTwo{false, n};
  }
  NewtonPolygon mirrored = reflect(poly);
  auto [rn, rm] = detail::zone_counts(mirrored);
  if (rn == 0 || detail::ratio_below_one(detail::facet_normal(mirrored, rn)))
    detail::proof_violation("reflected polygon does not satisfy ratio(b_n) >= 1");
  return CaseTwo{true, rn};
}

inline WitnessResult witness_nonnegative(const RIdeal& rideal, const std::optional<CoefficientSet>& declared = {}) {
  NewtonPolygon poly = weighted_minkowski_sum(rideal);
  if (!contains_one(poly)) throw Error(Errc::PolygonWithoutOne, "mld is -inf; use the -inf construction");
  GammaResult inv = detail::invariants_for(rideal, declared);
  std::int64_t bound = bound_nonneg(inv.e, inv.gamma);

  CaseTag tag = classify(poly);
  if (std::holds_alternative<CaseOne>(tag)) {
    Divisor unit{1, 1};
    return {MldValue::finite(log_discrepancy(poly, unit)), unit, unit.logdisc(), bound, CaseOne{}};
  }

  const auto two = std::get<CaseTwo>(tag);
  NewtonPolygon oriented = two.reflected ? reflect(poly) : poly;
  if (two.n >= oriented.size()) detail::proof_violation("zone-A vertex a_n has no successor");
  const Point& an = oriented.vertices()[two.n - 1];
  if (an.y < inv.gamma + 1 || an.y > 2) detail::proof_violation("a_n.y outside [1 + gamma, 2]");

  LatticeStep step = facet_lattice_step(Facet{an, oriented.vertices()[two.n]}, rideal.exponents());
  BoxMinimum best = box_minimum(oriented, step.step_x, step.step_y);
  Divisor p = two.reflected ? best.divisor.swapped() : best.divisor;
  return {MldValue::finite(best.value), p, p.logdisc(), bound, two};
}

namespace detail {

struct MinusInfinityWitness {
  Divisor divisor;
  bool reflected = false;
  bool unit_divisor = false;
};

/// Witness on a convenient polygon not containing 1.
inline MinusInfinityWitness construct_negative(const NewtonPolygon& poly, std::span<const Rat> exponents) {
  const Point& one = unit_point();
  if (support(poly, Rat(1), Rat(1)) > 2) return {Divisor{1, 1}, false, true};

  const auto& raw = poly.vertices();
  auto seed = std::find_if(raw.begin(), raw.end(), [](const Point& v) { return in_triangle(v); });
  if (seed == raw.end()) proof_violation("<1, Gamma> <= 2 but no vertex in the triangle");
  if (seed->x <= 1 && seed->y <= 1) proof_violation("vertex in [0,1]^2 although 1 is not in Gamma");
  bool reflected = seed->y <= 1;

  NewtonPolygon oriented = reflected ? reflect(poly) : poly;
  const auto& a = oriented.vertices();
  const std::size_t k = a.size();

  std::size_t j0 = 0;
  for (std::size_t i = 0; i < k; ++i)
    if (in_triangle(a[i])) j0 = i;
  if (!(a[j0].y > 1)) proof_violation("last triangle vertex has y <= 1");
  if (j0 + 1 >= k) proof_violation("last triangle vertex is the last vertex");

  std::optional<std::size_t> l0;
  for (std::size_t i = 0; i + 1 < k && !l0; ++i)
    if (line_side(a[i], a[i + 1], one) == LineSide::Minus) l0 = i;
  if (!l0 || *l0 > j0) proof_violation("no facet with 1 below it before the last triangle vertex");
  const Point& top = a[*l0];
  const Point& next = a[*l0 + 1];
  if (!in_triangle(top)) proof_violation("facet start is outside the triangle");

  LatticeStep step = facet_lattice_step(Facet{top, next}, exponents);
  const Rat& lambda = exponents[step.factor];
  Point c{top.x - step.alpha * (top.x - next.x), top.y - step.alpha * (top.y - next.y)};

  Point d = c;
  for (;;) {
    Point shifted{d.x - lambda, c.y};
    if (!(shifted.x > top.x) || line_side(top, shifted, one) != LineSide::Minus) break;
    d = std::move(shifted);
  }
  if (line_side(top, d, one) != LineSide::Minus) proof_violation("1 is not below the line through a and d");

  Rat px = (top.y - d.y) / lambda;
  Rat py = (d.x - top.x) / lambda;
  if (!is_integer(px) || !is_integer(py) || px < 1 || py < 1) proof_violation("witness vector is not in Z^2_{>=1}");
  Divisor p{checked_int64(num(px), "witness"), checked_int64(num(py), "witness")};
  return {reflected ? p.swapped() : p, reflected, false};
}

inline std::int64_t max_generator_coordinate(const RIdeal& rideal) {
  std::int64_t out = 0;
  for (const auto& f : rideal.factors)
    for (const auto& g : f.ideal.generators) out = std::max({out, g.x, g.y});
  return out;
}

}  // namespace detail

inline WitnessResult witness_minus_infinity(const RIdeal& rideal, const std::optional<CoefficientSet>& declared = {}) {
  NewtonPolygon original = weighted_minkowski_sum(rideal);
  if (contains_one(original)) throw Error(Errc::PolygonContainsOne, "mld is >= 0; use the nonnegative construction");
  GammaResult inv = detail::invariants_for(rideal, declared);
  std::int64_t bound = bound_minus_inf(inv.e, inv.gamma);
  std::vector<Rat> exponents = rideal.exponents();

  // Start at 1 + max coordinate and double until the convenient polygon
  // still misses 1 and the witness is negative on the original polygon.
  for (std::int64_t m = detail::max_generator_coordinate(rideal) + 1; m < (std::int64_t{1} << 40); m *= 2) {
    NewtonPolygon convenient = weighted_minkowski_sum(make_convenient(rideal, m));
    if (contains_one(convenient)) continue;
    auto w = detail::construct_negative(convenient, exponents);
    if (log_discrepancy(convenient, w.divisor) < 0 && log_discrepancy(original, w.divisor) < 0)
      return {MldValue::minus_infinity(), w.divisor, w.divisor.logdisc(), bound,
              MinusInfinityPath{w.reflected, w.unit_divisor, m}};
  }
  throw Error(Errc::ProofInvariantViolated, "no convenient modification produced a negative witness");
}

/// Dispatches on whether 1 lies in Gamma.
inline WitnessResult full_solve(const RIdeal& rideal, const std::optional<CoefficientSet>& declared = {}) {
  validate(rideal);
  if (contains_one(weighted_minkowski_sum(rideal))) return witness_nonnegative(rideal, declared);
  return witness_minus_infinity(rideal, declared);
}

}  // namespace mldn
