#pragma once

// Newton polygons of monomial R-ideals on the affine plane.
//
// A polygon is stored as its vertex chain a_1, ..., a_k ordered top-left to
// bottom-right (x strictly increasing, y strictly decreasing). The region it
// describes is conv(vertices) + R^2_{>=0}; the two unbounded edges are never
// materialized.

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mldn/coeffs.hpp"
#include "mldn/geom.hpp"
#include "mldn/rat.hpp"

namespace mldn {

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// A monomial ideal given by raw exponent vectors; duplicates and dominated
/// generators are allowed.
struct MonomialIdeal {
  std::vector<LatticePoint> generators;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
};

struct Factor {
  MonomialIdeal ideal;
  Rat exponent;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Formal product of monomial ideals with positive rational exponents.
struct RIdeal {
  std::vector<Factor> factors;

  std::vector<Rat> exponents() const {
    std::vector<Rat> out;
    out.reserve(factors.size());
    for (const auto& f : factors) out.push_back(f.exponent);
    return out;
  }

  /// The distinct exponents; a valid coefficient set for this ideal.
  CoefficientSet coefficient_set() const { return CoefficientSet(exponents()); }

  friend bool operator==(const RIdeal&, const RIdeal&) = default;
};

inline void validate(const MonomialIdeal& ideal) {
  if (ideal.generators.empty()) throw Error(Errc::EmptyIdeal, "monomial ideal has no generators");
  for (const auto& g : ideal.generators)
    if (g.x < 0 || g.y < 0)
      throw Error(Errc::InvalidIdeal,
                  "generator (" + std::to_string(g.x) + "," + std::to_string(g.y) + ") has a negative exponent");
}

inline void validate(const RIdeal& rideal) {
  if (rideal.factors.empty()) throw Error(Errc::EmptyIdeal, "R-ideal has no factors");
  for (const auto& f : rideal.factors) {
    validate(f.ideal);
    if (f.exponent <= 0) throw Error(Errc::InvalidIdeal, "exponent " + to_string(f.exponent) + " is not positive");
  }
}

/// Compact edge between consecutive vertices, top.y > bottom.y.
struct Facet {
  Point top;
  Point bottom;

  /// Inner normal (top.y - bottom.y, bottom.x - top.x); both components positive.
  std::pair<Rat, Rat> normal() const { return {top.y - bottom.y, bottom.x - top.x}; }
};

class NewtonPolygon {
 public:
  /// Vertex chain of conv(points + R^2_{>=0}). Dominated, duplicate and
  /// non-extreme points are dropped.
  static NewtonPolygon hull(std::vector<Point> points) {
    if (points.empty()) throw Error(Errc::EmptyIdeal, "no points to take the hull of");
    for (const auto& p : points)
      if (p.x < 0 || p.y < 0) throw Error(Errc::InvalidIdeal, "point with a negative coordinate");
    std::sort(points.begin(), points.end(), lex_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());

    // Staircase of Pareto-minimal points: x increasing, y strictly decreasing.
    std::vector<Point> stairs;
    for (auto& p : points)
      if (stairs.empty() || p.y < stairs.back().y) stairs.push_back(std::move(p));

    // Lower convex chain: every kept middle vertex is strictly below the
    // segment joining its neighbours.
    std::vector<Point> chain;
    for (auto& p : stairs) {
      while (chain.size() >= 2 && line_side(chain[chain.size() - 2], p, chain.back()) != LineSide::Minus)
        chain.pop_back();
      chain.push_back(std::move(p));
    }
    return NewtonPolygon(std::move(chain));
  }

  /// Wraps an existing vertex chain after checking it is one.
  static NewtonPolygon from_vertices(std::vector<Point> vertices) {
    if (vertices.empty()) throw Error(Errc::EmptyIdeal, "polygon without vertices");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      const auto& v = vertices[i];
      if (v.x < 0 || v.y < 0) throw Error(Errc::InvariantViolation, "vertex with a negative coordinate");
      if (i > 0 && !(vertices[i - 1].x < v.x && vertices[i - 1].y > v.y))
        throw Error(Errc::InvariantViolation, "vertices are not a strictly monotone chain");
      if (i >= 2 && line_side(vertices[i - 2], v, vertices[i - 1]) != LineSide::Minus)
        throw Error(Errc::InvariantViolation, "vertex chain is not strictly convex");
    }
    return NewtonPolygon(std::move(vertices));
  }

  const std::vector<Point>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }

  std::vector<Facet> facets() const {
    std::vector<Facet> out;
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) out.push_back({vertices_[i], vertices_[i + 1]});
    return out;
  }

  bool contains(const Point& q) const {
    if (q.x < vertices_.front().x || q.y < vertices_.back().y) return false;
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i)
      if (line_side(vertices_[i], vertices_[i + 1], q) == LineSide::Minus) return false;
    return true;
  }

  friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;

 private:
  explicit NewtonPolygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {}

  std::vector<Point> vertices_;
};

inline std::ostream& operator<<(std::ostream& os, const NewtonPolygon& poly) {
  os << '[';
  for (std::size_t i = 0; i < poly.size(); ++i) os << (i ? "," : "") << poly.vertices()[i];
  return os << ']';
}

inline NewtonPolygon polygon_of_ideal(const MonomialIdeal& ideal) {
  validate(ideal);
  std::vector<Point> pts;
  pts.reserve(ideal.generators.size());
  for (const auto& g : ideal.generators) pts.push_back({Rat(g.x), Rat(g.y)});
  return NewtonPolygon::hull(std::move(pts));
}

inline NewtonPolygon scaled(const NewtonPolygon& poly, const Rat& factor) {
  if (factor <= 0) throw Error(Errc::InvariantViolation, "scale factor must be positive");
  std::vector<Point> out;
  out.reserve(poly.size());
  for (const auto& v : poly.vertices()) out.push_back({v.x * factor, v.y * factor});
  return NewtonPolygon::from_vertices(std::move(out));
}

/// Minkowski sum by merging the two edge sequences in order of slope.
inline NewtonPolygon minkowski_sum(const NewtonPolygon& p, const NewtonPolygon& q) {
  const auto& pv = p.vertices();
  const auto& qv = q.vertices();
  std::vector<Point> out;
  out.reserve(pv.size() + qv.size());
  Point cur{pv.front().x + qv.front().x, pv.front().y + qv.front().y};
  out.push_back(cur);

  std::size_t i = 0;
  std::size_t j = 0;
  auto edge = [](const std::vector<Point>& v, std::size_t k) {
    return Point{v[k + 1].x - v[k].x, v[k + 1].y - v[k].y};  // dx > 0, dy < 0
  };
  while (i + 1 < pv.size() || j + 1 < qv.size()) {
    Point step;
    if (i + 1 >= pv.size()) {
      step = edge(qv, j++);
    } else if (j + 1 >= qv.size()) {
      step = edge(pv, i++);
    } else {
      Point ep = edge(pv, i);
      Point eq = edge(qv, j);
      // slope(ep) vs slope(eq), both dx positive
      Rat lhs = ep.y * eq.x;
      Rat rhs = eq.y * ep.x;
      if (lhs < rhs) {
        step = ep;
        ++i;
      } else if (rhs < lhs) {
        step = eq;
        ++j;
      } else {
        step = {ep.x + eq.x, ep.y + eq.y};
        ++i;
        ++j;
      }
    }
    cur = {cur.x + step.x, cur.y + step.y};
    out.push_back(cur);
  }
  return NewtonPolygon::from_vertices(std::move(out));
}

/// Newton polygon of the product: sum over factors of exponent * Gamma(ideal).
inline NewtonPolygon weighted_minkowski_sum(const RIdeal& rideal) {
  validate(rideal);
  NewtonPolygon acc = scaled(polygon_of_ideal(rideal.factors.front().ideal), rideal.factors.front().exponent);
  for (std::size_t k = 1; k < rideal.factors.size(); ++k)
    acc = minkowski_sum(acc, scaled(polygon_of_ideal(rideal.factors[k].ideal), rideal.factors[k].exponent));
  return acc;
}

inline bool contains_one(const NewtonPolygon& poly) { return poly.contains(unit_point()); }

/// <p, Gamma> = min over vertices of <p, v>; attained at a vertex since p >= 0.
inline Rat support(const NewtonPolygon& poly, const Rat& px, const Rat& py) {
  if (px < 0 || py < 0) throw Error(Errc::NegativeComponent, "support direction has a negative component");
  if (px == 0 && py == 0) throw Error(Errc::ZeroVector, "support direction is zero");
  const auto& v = poly.vertices();
  Rat best = px * v.front().x + py * v.front().y;
  for (std::size_t i = 1; i < v.size(); ++i) {
    Rat s = px * v[i].x + py * v[i].y;
    if (s < best) best = std::move(s);
  }
  return best;
}

/// Result of the lattice step on a compact facet: for factor index `factor`
/// with exponent lambda, alpha in (0, 1] is minimal with
/// alpha * (top - bottom) / lambda integral, and (step_x, step_y) =
/// alpha * normal / lambda.
struct LatticeStep {
  std::size_t factor = 0;
  Rat alpha;
  std::int64_t step_x = 0;
  std::int64_t step_y = 0;
};

/// Finds the factor and minimal alpha for a facet of a weighted Minkowski sum.
///
/// Writing (top - bottom) / lambda = v / D with v integral and D the common
/// denominator, alpha * v / D is integral exactly when alpha is a multiple of
/// D / gcd(v), so the minimal alpha is D / gcd(v) and the step is the
/// primitive normal. Among factors with alpha <= 1 the smallest step sum wins,
/// then the smallest index.
inline LatticeStep facet_lattice_step(const Facet& facet, std::span<const Rat> exponents) {
  if (!(facet.top.y > facet.bottom.y && facet.top.x < facet.bottom.x))
    throw Error(Errc::InvariantViolation, "facet endpoints are not ordered top-left to bottom-right");
  std::optional<LatticeStep> best;
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    const Rat& lambda = exponents[j];
    if (lambda <= 0) throw Error(Errc::NonPositiveLambda, "exponent " + to_string(lambda));
    Rat ux = (facet.top.x - facet.bottom.x) / lambda;
    Rat uy = (facet.top.y - facet.bottom.y) / lambda;
    BigInt d = lcm(den(ux), den(uy));
    BigInt vx = num(ux * Rat(d));
    BigInt vy = num(uy * Rat(d));
    BigInt g = gcd(vx < 0 ? BigInt(-vx) : vx, vy);
    Rat alpha(d, g);
    if (alpha > 1) continue;
    LatticeStep cand{j, alpha, checked_int64(vy / g, "lattice step"), checked_int64(-vx / g, "lattice step")};
    if (!best || cand.step_x + cand.step_y < best->step_x + best->step_y) best = cand;
  }
  if (!best)
    throw Error(Errc::NoLatticeStep, "no exponent gives an integral step on facet from " + to_string(facet.top.x) +
                                         "," + to_string(facet.top.y) + " to " + to_string(facet.bottom.x) + "," +
                                         to_string(facet.bottom.y));
  return *best;
}

/// Adds x^m and y^m to every factor so the polygon meets both axes.
inline RIdeal make_convenient(const RIdeal& rideal, std::int64_t m) {
  if (m < 1) throw Error(Errc::InvariantViolation, "convenience exponent must be >= 1");
  RIdeal out = rideal;
  for (auto& f : out.factors) {
    f.ideal.generators.push_back({m, 0});
    f.ideal.generators.push_back({0, m});
  }
  return out;
}

/// Reflection across the diagonal; an involution.
inline NewtonPolygon reflect(const NewtonPolygon& poly) {
  std::vector<Point> out;
  out.reserve(poly.size());
  for (auto it = poly.vertices().rbegin(); it != poly.vertices().rend(); ++it) out.push_back(swapped(*it));
  return NewtonPolygon::from_vertices(std::move(out));
}

inline RIdeal reflect(const RIdeal& rideal) {
  RIdeal out = rideal;
  for (auto& f : out.factors)
    for (auto& g : f.ideal.generators) std::swap(g.x, g.y);
  return out;
}

/// Both coordinates of `v` are nonnegative integer combinations of `coefficients`.
inline bool vertex_representable(const Point& v, std::span<const Rat> coefficients) {
  return in_monoid(v.x, coefficients) && in_monoid(v.y, coefficients);
}

}  // namespace mldn
