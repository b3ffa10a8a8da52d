#pragma once

// Planar primitives shared by every solver: points, exact orientation and
// ordering predicates, strictly convex clockwise polygons, and the ray casting
// used by the non-zero winding rule.
//
// Combinatorial decisions (orientation, ordering, crossing, intersection) are
// exact over the double coordinates. Lengths and perimeters are plain floating
// point.

#include <cstddef>
#include <span>
#include <vector>

#include "hullpart/exact.hpp"

namespace hullpart {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Directed segment a -> b.
struct Segment {
  Point a;
  Point b;
};

enum class Orientation { CW = -1, Collinear = 0, CCW = 1 };

/// Turn direction of a -> b -> c.
inline Orientation orientation(const Point& a, const Point& b, const Point& c) noexcept {
  return static_cast<Orientation>(exact::cross_sign(a.x, a.y, b.x, b.y, a.x, a.y, c.x, c.y));
}

/// Sign of cross(b - a, d - c).
inline int cross_sign(const Point& a, const Point& b, const Point& c, const Point& d) noexcept {
  return exact::cross_sign(a.x, a.y, b.x, b.y, c.x, c.y, d.x, d.y);
}

/// Sign of dot(b - a, d - c).
inline int dot_sign(const Point& a, const Point& b, const Point& c, const Point& d) noexcept {
  return exact::dot_sign(a.x, a.y, b.x, b.y, c.x, c.y, d.x, d.y);
}

/// Lexicographic (x, then y) order.
bool point_lt(const Point& u, const Point& v) noexcept;

/// Compares the angles of a and b seen from `anchor`, measured clockwise from
/// the +y direction. `anchor` must be point_lt-minimal among the compared
/// points, so every angle lies in [0, pi). Equal angles are ordered by
/// distance from the anchor. Returns -1, 0 or +1.
int angle_compare(const Point& anchor, const Point& a, const Point& b) noexcept;

inline bool angle_less(const Point& anchor, const Point& a, const Point& b) noexcept {
  return angle_compare(anchor, a, b) < 0;
}

double distance(const Point& a, const Point& b) noexcept;

struct BoundingBox {
  double min_x = 0.0;
  double min_y = 0.0;
  double max_x = 0.0;
  double max_y = 0.0;

  bool overlaps_open(const BoundingBox& other) const noexcept {
    return min_x < other.max_x && other.min_x < max_x && min_y < other.max_y &&
           other.min_y < max_y;
  }
};

/// Strictly convex polygon stored clockwise, starting at its point_lt-minimal
/// vertex. Perimeter, clockwise prefix lengths, bounds and an interior point
/// are computed once on construction.
class ConvexPolygon;
ConvexPolygon convex_hull(std::span<const Point> points);

class ConvexPolygon {
 public:
  /// Validates and canonicalizes a clockwise, strictly convex vertex cycle.
  /// Throws DegenerateInput if the cycle is not one.
  static ConvexPolygon from_clockwise(std::vector<Point> vertices);

  std::span<const Point> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }

  /// Vertex i modulo size().
  const Point& vertex(std::size_t i) const noexcept { return vertices_[i % vertices_.size()]; }

  const Point& min_vertex() const noexcept { return vertices_.front(); }

  /// Index of the point_lt-maximal vertex. Vertices [0, max_index] form the
  /// upper chain (x non-decreasing); [max_index, size] the lower chain.
  std::size_t max_index() const noexcept { return max_index_; }

  double perimeter() const noexcept { return prefix_.back(); }

  /// Clockwise boundary length from vertex 0 to vertex i, for i in [0, size()].
  double prefix_length(std::size_t i) const noexcept { return prefix_[i]; }

  /// Clockwise boundary length from vertex `from` to vertex `to`; zero when equal.
  double arc_length(std::size_t from, std::size_t to) const noexcept;

  const Point& interior_point() const noexcept { return interior_; }
  const BoundingBox& bounds() const noexcept { return bounds_; }

  friend bool operator==(const ConvexPolygon& a, const ConvexPolygon& b) noexcept {
    return a.vertices_ == b.vertices_;
  }

 private:
  friend ConvexPolygon convex_hull(std::span<const Point> points);
  explicit ConvexPolygon(std::vector<Point> canonical);

  std::vector<Point> vertices_;
  std::vector<double> prefix_;
  std::size_t max_index_ = 0;
  Point interior_;
  BoundingBox bounds_;
};

/// Strictly convex clockwise hull. Interior, duplicate and collinear boundary
/// points are dropped. Throws DegenerateInput when the points do not span the
/// plane.
ConvexPolygon convex_hull(std::span<const Point> points);

/// Hull of the union of the polygons' vertices.
ConvexPolygon convex_hull_of(std::span<const ConvexPolygon* const> polygons);

inline double perimeter(const ConvexPolygon& p) noexcept { return p.perimeter(); }

/// A point strictly inside p (the vertex centroid, verified exactly).
inline const Point& interior_point(const ConvexPolygon& p) noexcept { return p.interior_point(); }

/// Signed crossing of the upward vertical ray from `origin` by the directed
/// segment: +1 left-to-right, -1 right-to-left, 0 otherwise. A crossing counts
/// when min(a.x, b.x) <= origin.x < max(a.x, b.x) and the segment passes
/// strictly above the origin.
int ray_crossing_sign(const Segment& s, const Point& origin) noexcept;

/// Non-zero rule over p's clockwise edges; boundary points count as inside.
bool point_in_polygon(const Point& q, const ConvexPolygon& p) noexcept;

/// True iff q lies strictly inside p.
bool point_strictly_inside(const Point& q, const ConvexPolygon& p) noexcept;

/// Vertex of p furthest to the left of the directed line a -> b (a != b).
/// O(log n).
std::size_t extreme_vertex(const ConvexPolygon& p, const Point& a, const Point& b) noexcept;

/// True iff the closed segment shares a point with the open interior of p.
/// O(log n).
bool segment_intersects_interior(const Segment& s, const ConvexPolygon& p) noexcept;

/// True iff the open interiors of a and b intersect. Linear time.
bool interiors_overlap(const ConvexPolygon& a, const ConvexPolygon& b) noexcept;

}  // namespace hullpart
