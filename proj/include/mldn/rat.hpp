#pragma once

// Exact rationals. Every scalar in the library (exponents, coordinates,
// gamma, bounds) is a Rat; there is no floating point in the core.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "mldn/error.hpp"

namespace mldn {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

inline BigInt floor_int(const Rat& r) {
  BigInt n = num(r);
  BigInt d = den(r);
  BigInt q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) --q;
  return q;
}

inline BigInt ceil_int(const Rat& r) {
  BigInt q = floor_int(r);
  if (q != r) ++q;
  return q;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  BigInt g = gcd(a, b);
  BigInt l = a / g * b;
  return l < 0 ? BigInt(-l) : l;
}

inline std::optional<std::int64_t> to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    return std::nullopt;
  return static_cast<std::int64_t>(v);
}

inline std::int64_t checked_int64(const BigInt& v, std::string_view what) {
  auto out = to_int64(v);
  if (!out) throw Error(Errc::Overflow, std::string(what) + " does not fit in 64 bits");
  return *out;
}

/// "p/q" for non-integers, "n" for integers; always reduced.
inline std::string to_string(const Rat& r) {
  if (is_integer(r)) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

namespace detail {

inline std::optional<BigInt> parse_big_int(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::size_t i = 0;
  bool negative = false;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) return std::nullopt;
  BigInt v = 0;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + (c - '0');
  }
  return negative ? BigInt(-v) : v;
}

}  // namespace detail

/// Parses "p/q" or "n". Throws Errc::Parse on anything else, including "1.5".
inline Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  auto fail = [&] { return Error(Errc::Parse, "not a rational: \"" + std::string(text) + "\""); };
  if (slash == std::string_view::npos) {
    auto n = detail::parse_big_int(text);
    if (!n) throw fail();
    return Rat(*n);
  }
  auto n = detail::parse_big_int(text.substr(0, slash));
  auto d = detail::parse_big_int(text.substr(slash + 1));
  if (!n || !d || *d == 0) throw fail();
  if (*d < 0) return Rat(BigInt(-*n), BigInt(-*d));
  return Rat(*n, *d);
}

}  // namespace mldn
