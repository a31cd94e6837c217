#pragma once

#include <compare>
#include <ostream>

#include "mldn/rat.hpp"

namespace mldn {

struct Point {
  Rat x;
  Rat y;

  friend bool operator==(const Point&, const Point&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << '(' << to_string(p.x) << ',' << to_string(p.y) << ')';
}

/// Lexicographic order on (x, y).
inline bool lex_less(const Point& a, const Point& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

inline Point swapped(const Point& p) { return {p.y, p.x}; }

inline const Point& unit_point() {
  static const Point one{Rat(1), Rat(1)};
  return one;
}

/// Position of a point relative to a non-vertical line: above (Plus), on it,
/// or below (Minus), measured along the y direction.
enum class LineSide { Plus, On, Minus };

inline std::ostream& operator<<(std::ostream& os, LineSide s) {
  switch (s) {
    case LineSide::Plus: return os << "Plus";
    case LineSide::On: return os << "On";
    case LineSide::Minus: return os << "Minus";
  }
  return os;
}

/// Side of `q` with respect to the line through `a` and `b`.
///
/// The sign of (q.y - a.y)(b.x - a.x) - (b.y - a.y)(q.x - a.x), corrected by
/// the sign of b.x - a.x, so no division is performed.
inline LineSide line_side(const Point& a, const Point& b, const Point& q) {
  if (a == b) throw Error(Errc::DegenerateLine, "line through a single point");
  if (a.x == b.x) throw Error(Errc::VerticalLine, "line parallel to the y-axis");
  Rat dx = b.x - a.x;
  Rat cross = (q.y - a.y) * dx - (b.y - a.y) * (q.x - a.x);
  int s = cross.sign() * dx.sign();
  if (s > 0) return LineSide::Plus;
  if (s < 0) return LineSide::Minus;
  return LineSide::On;
}

/// Membership in the closed triangle {x, y >= 0, y <= 2 - x}.
inline bool in_triangle(const Point& q) { return q.y <= Rat(2) - q.x; }

/// Largest multiple of `lambda` that is <= a.
inline Rat floor_lambda(const Rat& a, const Rat& lambda) {
  if (lambda <= 0) throw Error(Errc::NonPositiveLambda, "lambda = " + to_string(lambda));
  return Rat(floor_int(a / lambda)) * lambda;
}

/// Smallest multiple of `lambda` that is >= a.
inline Rat ceil_lambda(const Rat& a, const Rat& lambda) {
  if (lambda <= 0) throw Error(Errc::NonPositiveLambda, "lambda = " + to_string(lambda));
  return Rat(ceil_int(a / lambda)) * lambda;
}

}  // namespace mldn
