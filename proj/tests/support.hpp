#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <random>
#include <vector>

#include "hullpart/geometry.hpp"

namespace hullpart::testing {

inline ConvexPolygon poly(std::initializer_list<Point> pts) {
  return convex_hull(std::vector<Point>(pts));
}

inline ConvexPolygon box(double x0, double y0, double x1, double y1) {
  return poly({{x0, y0}, {x0, y1}, {x1, y1}, {x1, y0}});
}

// Reference instances (data/fig*.json): two rectangles that should merge, two far squares that
// should not, and two overlapping squares plus a distant diamond.
inline std::vector<ConvexPolygon> near_rects() { return {box(0, 0, 3, 3), box(4, 0.5, 7, 2.5)}; }
inline std::vector<ConvexPolygon> far_squares() { return {box(0, 0, 1, 1), box(6, 0, 7, 1)}; }
inline ConvexPolygon diamond() { return poly({{4, 0}, {5, 1}, {6, 0}, {5, -1}}); }
inline std::vector<ConvexPolygon> overlap_trio() {
  return {box(0, 0, 1, 1), box(0.5, 0.5, 1.5, 1.5), diamond()};
}

inline ConvexPolygon regular(double cx, double cy, double r, std::size_t k, double phase = 0.0) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < k; ++i) {
    const double t = phase + 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(k);
    pts.push_back({cx + r * std::cos(t), cy + r * std::sin(t)});
  }
  return convex_hull(pts);
}

// Hull of m random points on a random ellipse around (cx, cy).
inline ConvexPolygon random_convex(std::mt19937_64& rng, double cx, double cy, double rmax,
                                   std::size_t m) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (;;) {
    const double a = 0.2 * rmax + 0.8 * rmax * u(rng);
    const double b = 0.2 * rmax + 0.8 * rmax * u(rng);
    const double rot = std::numbers::pi * u(rng);
    std::vector<Point> pts;
    for (std::size_t j = 0; j < m; ++j) {
      const double t = 2.0 * std::numbers::pi * u(rng);
      const double ex = a * std::cos(t);
      const double ey = b * std::sin(t);
      pts.push_back({cx + ex * std::cos(rot) - ey * std::sin(rot),
                     cy + ex * std::sin(rot) + ey * std::cos(rot)});
    }
    try {
      return convex_hull(pts);
    } catch (const std::exception&) {
    }
  }
}

// Hull of random points on a small integer grid: many collinear and shared
// coordinates.
inline ConvexPolygon random_lattice(std::mt19937_64& rng, int x0, int y0, int size, std::size_t m) {
  std::uniform_int_distribution<int> d(0, size);
  for (;;) {
    std::vector<Point> pts;
    for (std::size_t j = 0; j < m; ++j) {
      pts.push_back({static_cast<double>(x0 + d(rng)), static_cast<double>(y0 + d(rng))});
    }
    try {
      return convex_hull(pts);
    } catch (const std::exception&) {
    }
  }
}

// Winding number by summing turning angles; independent of ray casting.
inline int winding_by_angles(const Point& q, const ConvexPolygon& p) {
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point& a = p.vertex(i);
    const Point& b = p.vertex(i + 1);
    const double ax = a.x - q.x;
    const double ay = a.y - q.y;
    const double bx = b.x - q.x;
    const double by = b.y - q.y;
    total += std::atan2(ax * by - ay * bx, ax * bx + ay * by);
  }
  // Clockwise cycles turn by -2 pi around interior points.
  return static_cast<int>(std::lround(-total / (2.0 * std::numbers::pi)));
}

}  // namespace hullpart::testing
