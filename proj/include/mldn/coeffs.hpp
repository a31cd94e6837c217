#pragma once

// Invariants of a finite coefficient set I: e = min I and
//   gamma = min { sum n_i b_i - 1 > 0 : n_i >= 0, b_i in I },
// plus the two log discrepancy bounds built from them.

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "mldn/rat.hpp"

namespace mldn {

class CoefficientSet {
 public:
  /// Sorts and deduplicates; rejects empty input and non-positive values.
  explicit CoefficientSet(std::vector<Rat> values) : values_(std::move(values)) {
    if (values_.empty()) throw Error(Errc::EmptySet, "coefficient set is empty");
    for (const auto& v : values_)
      if (v <= 0) throw Error(Errc::InvariantViolation, "coefficient " + to_string(v) + " is not positive");
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
  }

  const std::vector<Rat>& values() const noexcept { return values_; }
  const Rat& min() const noexcept { return values_.front(); }
  const Rat& max() const noexcept { return values_.back(); }
  bool contains(const Rat& v) const { return std::binary_search(values_.begin(), values_.end(), v); }

 private:
  std::vector<Rat> values_;
};

struct GammaResult {
  Rat e;
  Rat gamma;
  /// (value, multiplicity) with sum of value * multiplicity == 1 + gamma;
  /// ascending by value, zero multiplicities omitted.
  std::vector<std::pair<Rat, std::int64_t>> witness;
};

namespace detail {

/// Integer form of a finite set of rationals over their least common denominator.
struct ScaledSet {
  BigInt denominator;
  std::vector<std::int64_t> numerators;
};

inline ScaledSet scale_to_integers(std::span<const Rat> values, const BigInt& extra_denominator = 1) {
  BigInt d = extra_denominator;
  for (const auto& v : values) d = lcm(d, den(v));
  ScaledSet out{d, {}};
  out.numerators.reserve(values.size());
  for (const auto& v : values) out.numerators.push_back(checked_int64(num(v * Rat(d)), "scaled coefficient"));
  return out;
}

// Upper limit on DP table sizes; far beyond anything a realistic instance needs.
inline constexpr std::int64_t kMaxTable = std::int64_t{1} << 28;

}  // namespace detail

/// Whether `value` lies in the additive monoid generated by `generators`
/// (0 is always a member). Decided by a reachability table over the common
/// denominator.
inline bool in_monoid(const Rat& value, std::span<const Rat> generators) {
  if (value == 0) return true;
  if (value < 0) return false;
  for (const auto& g : generators)
    if (g <= 0) throw Error(Errc::InvariantViolation, "monoid generator " + to_string(g) + " is not positive");
  auto scaled = detail::scale_to_integers(generators, den(value));
  std::int64_t target = checked_int64(num(value * Rat(scaled.denominator)), "monoid target");
  if (target > detail::kMaxTable) throw Error(Errc::Overflow, "monoid table too large");
  std::vector<char> reach(static_cast<std::size_t>(target) + 1, 0);
  reach[0] = 1;
  for (std::int64_t s = 1; s <= target; ++s)
    for (auto c : scaled.numerators)
      if (c <= s && reach[static_cast<std::size_t>(s - c)]) {
        reach[static_cast<std::size_t>(s)] = 1;
        break;
      }
  return reach[static_cast<std::size_t>(target)] != 0;
}

/// Computes e and gamma of a finite coefficient set.
///
/// With d the common denominator and c_i the scaled numerators, the smallest
/// monoid element s > d is at most d + min c_i (some multiple of min c_i lands
/// in (d, d + min c_i]), so the table stops there. gamma = s/d - 1.
inline GammaResult gamma_of(const CoefficientSet& set) {
  const auto& values = set.values();
  auto scaled = detail::scale_to_integers(values);
  std::int64_t d = checked_int64(scaled.denominator, "common denominator");
  std::int64_t cmin = scaled.numerators.front();
  std::int64_t cap = d + cmin;
  if (cap > detail::kMaxTable) throw Error(Errc::Overflow, "gamma table too large");

  // last[s] = index of the generator used to reach s, -1 if unreachable.
  std::vector<int> last(static_cast<std::size_t>(cap) + 1, -1);
  last[0] = 0;
  std::int64_t found = -1;
  for (std::int64_t s = 1; s <= cap && found < 0; ++s) {
    for (std::size_t i = 0; i < scaled.numerators.size(); ++i) {
      std::int64_t c = scaled.numerators[i];
      if (c <= s && last[static_cast<std::size_t>(s - c)] >= 0) {
        last[static_cast<std::size_t>(s)] = static_cast<int>(i);
        break;
      }
    }
    if (s > d && last[static_cast<std::size_t>(s)] >= 0) found = s;
  }
  if (found < 0) throw Error(Errc::InvariantViolation, "no monoid element in (d, d + min c]");

  std::vector<std::int64_t> counts(values.size(), 0);
  for (std::int64_t s = found; s > 0;) {
    auto i = static_cast<std::size_t>(last[static_cast<std::size_t>(s)]);
    ++counts[i];
    s -= scaled.numerators[i];
  }
  GammaResult out{set.min(), Rat(found, d) - 1, {}};
  for (std::size_t i = 0; i < values.size(); ++i)
    if (counts[i] > 0) out.witness.emplace_back(values[i], counts[i]);
  return out;
}

namespace detail {

inline void require_e_at_least_gamma(const Rat& e, const Rat& gamma) {
  if (gamma <= 0) throw Error(Errc::InvariantViolation, "gamma must be positive, got " + to_string(gamma));
  if (e < gamma)
    throw Error(Errc::InvariantViolation, "e = " + to_string(e) + " is smaller than gamma = " + to_string(gamma));
}

inline BigInt bound_core(const Rat& e, const Rat& gamma) {
  Rat g1 = gamma + 1;
  return floor_int(g1 / (e * gamma)) + ceil_int(g1 / e);
}

}  // namespace detail

/// max{ floor((g+1)/(e g)) + ceil((g+1)/e), 2 }: bound for pairs with mld >= 0.
inline std::int64_t bound_nonneg(const Rat& e, const Rat& gamma) {
  detail::require_e_at_least_gamma(e, gamma);
  BigInt b = detail::bound_core(e, gamma);
  if (b < 2) b = 2;
  return checked_int64(b, "bound");
}

/// floor((g+1)/(e g)) + ceil((g+1)/e) + 1: bound for pairs with mld = -inf.
inline std::int64_t bound_minus_inf(const Rat& e, const Rat& gamma) {
  detail::require_e_at_least_gamma(e, gamma);
  return checked_int64(detail::bound_core(e, gamma) + 1, "bound");
}

}  // namespace mldn
