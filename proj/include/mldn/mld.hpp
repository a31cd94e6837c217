#pragma once

// Log discrepancies of toric divisors E_p over a monomial R-ideal:
//   a(E_p) = <p, 1> - <p, Gamma> = p_x + p_y - min_v <p, v>,
// and the brute-force lattice oracle over p in Z^2_{>=1} with p_x + p_y <= R.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "mldn/newton.hpp"

namespace mldn {

/// Toric divisor E_p for p in Z^2 with both coordinates >= 1 (center at the origin).
struct Divisor {
  std::int64_t x = 1;
  std::int64_t y = 1;

  /// k_E + 1 = p_x + p_y.
  std::int64_t logdisc() const noexcept { return x + y; }
  Divisor swapped() const noexcept { return {y, x}; }

  friend bool operator==(const Divisor&, const Divisor&) = default;
  friend auto operator<=>(const Divisor&, const Divisor&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Divisor& d) { return os << '(' << d.x << ',' << d.y << ')'; }

/// Either a finite nonnegative rational or minus infinity.
class MldValue {
 public:
  static MldValue finite(Rat v) {
    if (v < 0) throw Error(Errc::InvariantViolation, "finite mld must be >= 0, got " + to_string(v));
    return MldValue(std::move(v));
  }
  static MldValue minus_infinity() { return MldValue(std::nullopt); }

  bool is_finite() const noexcept { return value_.has_value(); }
  const Rat& value() const {
    if (!value_) throw Error(Errc::InvariantViolation, "mld is -inf");
    return *value_;
  }
  std::string str() const { return value_ ? to_string(*value_) : "-inf"; }

  friend bool operator==(const MldValue&, const MldValue&) = default;

 private:
  explicit MldValue(std::optional<Rat> v) : value_(std::move(v)) {}
  std::optional<Rat> value_;
};

struct OracleReport {
  std::int64_t radius = 0;
  Rat min_value;
  std::vector<Divisor> argmins;  // lexicographic order
  bool any_negative = false;
};

struct ComputingDivisor {
  std::int64_t logdisc = 0;
  Divisor divisor;
};

inline void check_divisor(const Divisor& p) {
  if (p.x < 1 || p.y < 1) throw Error(Errc::InvariantViolation, "divisor coordinates must be >= 1");
}

inline Rat log_discrepancy(const NewtonPolygon& poly, const Divisor& p) {
  check_divisor(p);
  Rat px(p.x);
  Rat py(p.y);
  return px + py - support(poly, px, py);
}

/// Worker count for lattice scans: MLD_NEWTON_THREADS if set (>= 1), else the
/// hardware concurrency.
inline unsigned worker_count() {
  if (const char* env = std::getenv("MLD_NEWTON_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

namespace detail {

inline BigInt to_big(__int128 v) {
  bool negative = v < 0;
  unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  BigInt out = BigInt(static_cast<std::uint64_t>(mag >> 64));
  out <<= 64;
  out += BigInt(static_cast<std::uint64_t>(mag));
  return negative ? BigInt(-out) : out;
}

/// All vertices multiplied by a common denominator so that scale * a(E_p) is
/// an integer computed in 128-bit arithmetic. Exact; used whenever the scaled
/// coordinates fit in 62 bits.
class ScaledEvaluator {
 public:
  using Value = __int128;

  static std::optional<ScaledEvaluator> make(const NewtonPolygon& poly) {
    BigInt d = 1;
    for (const auto& v : poly.vertices()) d = lcm(lcm(d, den(v.x)), den(v.y));
    constexpr std::int64_t kLimit = std::int64_t{1} << 62;
    auto fits = [&](const BigInt& b) { return b < kLimit && b > -kLimit; };
    if (!fits(d)) return std::nullopt;
    ScaledEvaluator out;
    out.scale_ = static_cast<std::int64_t>(d);
    for (const auto& v : poly.vertices()) {
      BigInt x = num(v.x * Rat(d));
      BigInt y = num(v.y * Rat(d));
      if (!fits(x) || !fits(y)) return std::nullopt;
      out.vertices_.emplace_back(static_cast<std::int64_t>(x), static_cast<std::int64_t>(y));
    }
    return out;
  }

  Value value(const Divisor& p) const noexcept {
    Value best = std::numeric_limits<Value>::max();
    for (const auto& [vx, vy] : vertices_) {
      Value s = static_cast<Value>(p.x) * vx + static_cast<Value>(p.y) * vy;
      if (s < best) best = s;
    }
    return static_cast<Value>(scale_) * (p.x + p.y) - best;
  }

  Rat to_rat(Value v) const { return Rat(to_big(v), BigInt(scale_)); }

 private:
  std::int64_t scale_ = 1;
  std::vector<std::pair<std::int64_t, std::int64_t>> vertices_;
};

class ExactEvaluator {
 public:
  using Value = Rat;

  explicit ExactEvaluator(const NewtonPolygon& poly) : poly_(&poly) {}
  Value value(const Divisor& p) const { return log_discrepancy(*poly_, p); }
  Rat to_rat(const Value& v) const { return v; }

 private:
  const NewtonPolygon* poly_;
};

template <class F>
decltype(auto) with_evaluator(const NewtonPolygon& poly, F&& f) {
  if (auto fast = ScaledEvaluator::make(poly)) return f(*fast);
  return f(ExactEvaluator(poly));
}

template <class Value>
struct ScanPart {
  std::optional<Value> min;
  std::vector<Divisor> argmins;
  bool any_negative = false;
};

inline void check_radius(std::int64_t radius) {
  if (radius < 2) throw Error(Errc::RadiusTooSmall, "radius " + std::to_string(radius) + " < 2");
  if (radius > (std::int64_t{1} << 31)) throw Error(Errc::Overflow, "radius too large");
}

}  // namespace detail

/// Evaluates a(E_p) at every p >= (1,1) with p_x + p_y <= radius.
///
/// Columns p_x are dealt round-robin to workers; the merge takes the global
/// minimum and sorts the argmins, so the report does not depend on the
/// number of workers.
inline OracleReport brute_force_oracle(const NewtonPolygon& poly, std::int64_t radius,
                                       unsigned workers = worker_count()) {
  detail::check_radius(radius);
  return detail::with_evaluator(poly, [&](const auto& eval) {
    using Value = typename std::decay_t<decltype(eval)>::Value;
    std::int64_t columns = radius - 1;
    unsigned n = static_cast<unsigned>(std::clamp<std::int64_t>(workers, 1, columns));
    if (radius < 64) n = 1;
    std::vector<detail::ScanPart<Value>> parts(n);

    auto run = [&](unsigned w) {
      auto& part = parts[w];
      for (std::int64_t px = 1 + w; px <= columns; px += n) {
        for (std::int64_t py = 1; px + py <= radius; ++py) {
          Divisor p{px, py};
          Value v = eval.value(p);
          if (v < 0) part.any_negative = true;
          if (!part.min || v < *part.min) {
            part.min = v;
            part.argmins.assign(1, p);
          } else if (v == *part.min) {
            part.argmins.push_back(p);
          }
        }
      }
    };
    if (n == 1) {
      run(0);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(n);
      for (unsigned w = 0; w < n; ++w) pool.emplace_back(run, w);
      for (auto& t : pool) t.join();
    }

    detail::ScanPart<Value> merged;
    for (auto& part : parts) {
      merged.any_negative = merged.any_negative || part.any_negative;
      if (!part.min) continue;
      if (!merged.min || *part.min < *merged.min) {
        merged.min = part.min;
        merged.argmins = std::move(part.argmins);
      } else if (*part.min == *merged.min) {
        merged.argmins.insert(merged.argmins.end(), part.argmins.begin(), part.argmins.end());
      }
    }
    std::sort(merged.argmins.begin(), merged.argmins.end());
    return OracleReport{radius, eval.to_rat(*merged.min), std::move(merged.argmins), merged.any_negative};
  });
}

/// Smallest p_x + p_y among divisors within `radius` that compute the mld
/// (attain the minimum when 1 is in Gamma, have negative value otherwise),
/// and the lexicographically smallest divisor with that sum.
inline ComputingDivisor minimal_computing_logdisc(const NewtonPolygon& poly, std::int64_t radius) {
  detail::check_radius(radius);
  if (contains_one(poly)) {
    OracleReport report = brute_force_oracle(poly, radius);
    auto best = std::min_element(report.argmins.begin(), report.argmins.end(), [](const Divisor& a, const Divisor& b) {
      if (a.logdisc() != b.logdisc()) return a.logdisc() < b.logdisc();
      return a < b;
    });
    return {best->logdisc(), *best};
  }
  return detail::with_evaluator(poly, [&](const auto& eval) -> ComputingDivisor {
    for (std::int64_t s = 2; s <= radius; ++s)
      for (std::int64_t px = 1; px < s; ++px) {
        Divisor p{px, s - px};
        if (eval.value(p) < 0) return {s, p};
      }
    throw Error(Errc::NoComputingDivisorInRadius,
                "no divisor with negative log discrepancy within radius " + std::to_string(radius));
  });
}

struct BoxMinimum {
  Rat value;
  Divisor divisor;
};

/// Minimum of a(E_p) over the box [1..width] x [1..height]; ties go to the
/// smaller p_x + p_y, then to the lexicographically smaller p.
inline BoxMinimum box_minimum(const NewtonPolygon& poly, std::int64_t width, std::int64_t height) {
  if (width < 1 || height < 1) throw Error(Errc::InvariantViolation, "empty box");
  return detail::with_evaluator(poly, [&](const auto& eval) {
    using Value = typename std::decay_t<decltype(eval)>::Value;
    std::optional<Value> best;
    Divisor arg;
    for (std::int64_t px = 1; px <= width; ++px)
      for (std::int64_t py = 1; py <= height; ++py) {
        Divisor p{px, py};
        Value v = eval.value(p);
        bool better = !best || v < *best ||
                      (v == *best && (p.logdisc() < arg.logdisc() || (p.logdisc() == arg.logdisc() && p < arg)));
        if (better) {
          best = std::move(v);
          arg = p;
        }
      }
    return BoxMinimum{eval.to_rat(*best), arg};
  });
}

}  // namespace mldn
