#include "hullpart/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "hullpart/errors.hpp"

namespace hullpart {


bool point_lt(const Point& u, const Point& v) noexcept {
  return u.x < v.x || (u.x == v.x && u.y < v.y);
}

int angle_compare(const Point& anchor, const Point& a, const Point& b) noexcept {
  // Both directions lie in the half-plane x >= anchor.x (vertical only
  // upwards), so a clockwise cross product means a strictly smaller angle.
  const int turn = cross_sign(anchor, a, anchor, b);
  if (turn != 0) return turn < 0 ? -1 : 1;
  // Same ray: point_lt grows with distance from the anchor.
  if (a == b) return 0;
  return point_lt(a, b) ? -1 : 1;
}

double distance(const Point& a, const Point& b) noexcept {
  return std::hypot(b.x - a.x, b.y - a.y);
}

namespace {

bool strictly_inside_cycle(const Point& q, std::span<const Point> v) noexcept {
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (orientation(v[i], v[(i + 1) % n], q) != Orientation::CW) return false;
  }
  return true;
}

Point pick_interior(std::span<const Point> v) {
  long double sx = 0.0L;
  long double sy = 0.0L;
  for (const Point& p : v) {
    sx += p.x;
    sy += p.y;
  }
  const auto k = static_cast<long double>(v.size());
  const Point centroid{static_cast<double>(sx / k), static_cast<double>(sy / k)};
  if (strictly_inside_cycle(centroid, v)) return centroid;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    const Point& c = v[(i + 2) % n];
    const Point t{(a.x + b.x + c.x) / 3.0, (a.y + b.y + c.y) / 3.0};
    if (strictly_inside_cycle(t, v)) return t;
  }
  throw DegenerateInput("polygon too thin to hold a representable interior point");
}

}  // namespace

ConvexPolygon::ConvexPolygon(std::vector<Point> canonical) : vertices_(std::move(canonical)) {
  const std::size_t n = vertices_.size();
  prefix_.resize(n + 1);
  prefix_[0] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    prefix_[i + 1] = prefix_[i] + distance(vertices_[i], vertices_[(i + 1) % n]);
  }
  bounds_ = {vertices_[0].x, vertices_[0].y, vertices_[0].x, vertices_[0].y};
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = vertices_[i];
    bounds_.min_x = std::min(bounds_.min_x, p.x);
    bounds_.min_y = std::min(bounds_.min_y, p.y);
    bounds_.max_x = std::max(bounds_.max_x, p.x);
    bounds_.max_y = std::max(bounds_.max_y, p.y);
    if (point_lt(vertices_[max_index_], p)) max_index_ = i;
  }
  interior_ = pick_interior(vertices_);
}

ConvexPolygon ConvexPolygon::from_clockwise(std::vector<Point> vertices) {
  if (vertices.size() < 3) throw DegenerateInput("polygon needs at least 3 vertices");
  const auto first = std::min_element(vertices.begin(), vertices.end(), point_lt);
  std::rotate(vertices.begin(), first, vertices.end());
  ConvexPolygon hull = convex_hull(vertices);
  if (hull.vertices_ != vertices) {
    throw DegenerateInput("vertex cycle is not strictly convex and clockwise");
  }
  return hull;
}

double ConvexPolygon::arc_length(std::size_t from, std::size_t to) const noexcept {
  if (from <= to) return prefix_[to] - prefix_[from];
  return prefix_.back() - prefix_[from] + prefix_[to];
}

ConvexPolygon convex_hull(std::span<const Point> points) {
  std::vector<Point> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end(), point_lt);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() < 3) throw DegenerateInput("fewer than 3 distinct points");

  // Monotone chain, keeping only strict right turns so the cycle is clockwise
  // and strictly convex. The upper chain starts at the minimal point.
  std::vector<Point> hull;
  hull.reserve(sorted.size() + 1);
  auto extend = [&hull](const Point& p, std::size_t floor) {
    while (hull.size() >= floor + 2 &&
           orientation(hull[hull.size() - 2], hull.back(), p) != Orientation::CW) {
      hull.pop_back();
    }
    hull.push_back(p);
  };
  for (const Point& p : sorted) extend(p, 0);
  const std::size_t upper = hull.size() - 1;
  for (auto it = sorted.rbegin() + 1; it != sorted.rend(); ++it) extend(*it, upper);
  hull.pop_back();  // closing copy of the minimal point
  if (hull.size() < 3) throw DegenerateInput("points are collinear");
  return ConvexPolygon(std::move(hull));
}

ConvexPolygon convex_hull_of(std::span<const ConvexPolygon* const> polygons) {
  std::vector<Point> pts;
  for (const ConvexPolygon* p : polygons) pts.insert(pts.end(), p->vertices().begin(), p->vertices().end());
  return convex_hull(pts);
}

int ray_crossing_sign(const Segment& s, const Point& origin) noexcept {
  if (s.a.x == s.b.x) return 0;
  const bool rightward = s.a.x < s.b.x;
  const Point& left = rightward ? s.a : s.b;
  const Point& right = rightward ? s.b : s.a;
  if (!(left.x <= origin.x && origin.x < right.x)) return 0;
  // The segment passes above the origin iff the origin lies right of left -> right.
  if (orientation(left, right, origin) != Orientation::CW) return 0;
  return rightward ? 1 : -1;
}

namespace {

bool on_segment(const Point& q, const Point& a, const Point& b) noexcept {
  return orientation(a, b, q) == Orientation::Collinear && std::min(a.x, b.x) <= q.x &&
         q.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= q.y && q.y <= std::max(a.y, b.y);
}

}  // namespace

bool point_in_polygon(const Point& q, const ConvexPolygon& p) noexcept {
  const auto v = p.vertices();
  const std::size_t n = v.size();
  int counter = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    if (on_segment(q, a, b)) return true;
    counter += ray_crossing_sign({a, b}, q);
  }
  return counter == 1;
}

bool point_strictly_inside(const Point& q, const ConvexPolygon& p) noexcept {
  return strictly_inside_cycle(q, p.vertices());
}

namespace {

// 0 for clockwise angles from direction ra -> rb in [0, pi), 1 for [pi, 2 pi).
int half(const Point& ra, const Point& rb, const Point& da, const Point& db) noexcept {
  const int c = cross_sign(ra, rb, da, db);
  if (c < 0) return 0;
  if (c == 0 && dot_sign(ra, rb, da, db) > 0) return 0;
  return 1;
}

// First k in [lo, hi) with pred(k), or hi; pred holds on a suffix.
template <typename Pred>
std::size_t first_true(std::size_t lo, std::size_t hi, Pred pred) {
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (pred(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

}  // namespace

std::size_t extreme_vertex(const ConvexPolygon& p, const Point& a, const Point& b) noexcept {
  // Edge directions turn clockwise; the support vertex ends the last edge
  // whose direction is at or before a -> b, measured from edge 0.
  const Point& r0 = p.vertex(0);
  const Point& r1 = p.vertex(1);
  const int hd = half(r0, r1, a, b);
  auto before_or_at = [&](std::size_t i) {
    const Point& e0 = p.vertex(i);
    const Point& e1 = p.vertex(i + 1);
    const int he = half(r0, r1, e0, e1);
    if (he != hd) return he < hd;
    return cross_sign(a, b, e0, e1) >= 0;
  };
  const std::size_t n = p.size();
  const std::size_t k = first_true(1, n, [&](std::size_t i) { return !before_or_at(i); });
  return k % n;
}

bool segment_intersects_interior(const Segment& s, const ConvexPolygon& p) noexcept {
  const BoundingBox sb{std::min(s.a.x, s.b.x), std::min(s.a.y, s.b.y), std::max(s.a.x, s.b.x),
                       std::max(s.a.y, s.b.y)};
  if (!sb.overlaps_open(p.bounds())) return false;
  if (s.a == s.b) return point_strictly_inside(s.a, p);

  // The line must pass strictly through the polygon.
  const std::size_t n = p.size();
  const std::size_t left = extreme_vertex(p, s.a, s.b);
  const std::size_t right = extreme_vertex(p, s.b, s.a);
  auto side = [&](std::size_t i) { return static_cast<int>(orientation(s.a, s.b, p.vertex(i))); };
  if (side(left) <= 0 || side(right) >= 0) return false;

  // Side values are monotone along both chains between the extremes, so the
  // edges where the line crosses the boundary are found by binary search.
  const std::size_t down = (right + n - left) % n;
  const std::size_t k1 = first_true(1, down, [&](std::size_t k) { return side(left + k) <= 0; });
  const std::size_t up = (left + n - right) % n;
  const std::size_t k2 = first_true(1, up, [&](std::size_t k) { return side(right + k) >= 0; });

  // On the line, being weakly outside a crossing edge means lying beyond the
  // chord on that side. The open segment meets the open chord unless both of
  // its endpoints lie beyond the same end.
  auto beyond = [&](std::size_t end) {
    const Point& e0 = p.vertex(end + n - 1);
    const Point& e1 = p.vertex(end);
    return orientation(e0, e1, s.a) != Orientation::CW && orientation(e0, e1, s.b) != Orientation::CW;
  };
  return !beyond(left + k1) && !beyond(right + k2);
}

namespace {

// True if some edge line of `p` has all of `q` weakly on its outer side.
bool separated_by_edge_of(const ConvexPolygon& p, const ConvexPolygon& q) noexcept {
  const auto pv = p.vertices();
  const auto qv = q.vertices();
  const std::size_t n = pv.size();
  const std::size_t m = qv.size();

  // j tracks the vertex of q deepest on the inner side of the current edge;
  // it only rotates clockwise as the edges do.
  std::size_t j = 0;
  for (std::size_t k = 1; k < m; ++k) {
    if (cross_sign(pv[0], pv[1], qv[j], qv[k]) < 0) j = k;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = pv[i];
    const Point& b = pv[(i + 1) % n];
    for (std::size_t steps = 0; steps < m; ++steps) {
      const Point& cur = qv[j];
      const Point& nxt = qv[(j + 1) % m];
      const int c = cross_sign(a, b, cur, nxt);
      if (c < 0 || (c == 0 && dot_sign(a, b, cur, nxt) > 0)) {
        j = (j + 1) % m;
      } else {
        break;
      }
    }
    if (orientation(a, b, qv[j]) != Orientation::CW) return true;
  }
  return false;
}

}  // namespace

bool interiors_overlap(const ConvexPolygon& a, const ConvexPolygon& b) noexcept {
  if (!a.bounds().overlaps_open(b.bounds())) return false;
  return !separated_by_edge_of(a, b) && !separated_by_edge_of(b, a);
}

}  // namespace hullpart
