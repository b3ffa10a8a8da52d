#pragma once

// Fast path for inputs whose polygons have pairwise disjoint interiors.
//
// The boundary of the hull of disjoint convex polygons is a cyclic sequence of
// common outer tangents and clockwise boundary arcs. The DP therefore only
// needs nodes at tangent endpoints (plus min vertices and the anchor) and
// edges along tangents and along the arcs between consecutive nodes of one
// polygon.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "hullpart/engine.hpp"
#include "hullpart/geometry.hpp"
#include "hullpart/partition.hpp"

namespace hullpart {

/// Segment between vertex p_vertex of P and vertex q_vertex of Q.
struct Tangent {
  std::size_t p_vertex = 0;
  std::size_t q_vertex = 0;
  double length = 0.0;

  friend bool operator==(const Tangent&, const Tangent&) = default;
};

/// The two bridges of hull(P u Q): `forward` is traversed clockwise from P to
/// Q, `backward` from Q to P. When a tangent line contains a polygon edge, the
/// endpoint is the touching vertex nearest the other polygon.
struct OuterTangents {
  Tangent forward;
  Tangent backward;

  friend bool operator==(const OuterTangents&, const OuterTangents&) = default;
};

/// Outer tangents of two polygons with disjoint interiors. Binary search runs
/// in O(log^2 m); the linear variant merges both edge sequences.
OuterTangents common_outer_tangents(const ConvexPolygon& p, const ConvexPolygon& q,
                                    TangentSearch search = TangentSearch::Binary);

/// Clockwise boundary run from vertex `start` to vertex `end`. start == end is
/// empty unless `full` is set, in which case the arc is the whole cycle.
struct Arc {
  std::size_t start = 0;
  std::size_t end = 0;
  bool full = false;
};

double arc_length(const ConvexPolygon& p, const Arc& a) noexcept;

/// Net signed crossings of the upward ray from `origin` by the arc's directed
/// edges, by binary search over its x-monotone pieces.
int ray_arc_crossings(const ConvexPolygon& p, const Arc& a, const Point& origin) noexcept;

struct GraphEdge {
  std::size_t from = 0;  // node indices
  std::size_t to = 0;
  bool is_arc = false;
  std::uint32_t element = 0;  // arc owner
  Arc arc;
  double length = 0.0;
  double pickup = 0.0;    // signed perimeter pickup traversing from -> to
  bool free = true;       // avoids every open interior
  bool monotone = true;   // angle around the anchor never decreases along it
};

struct TangentGraph {
  std::vector<Point> nodes;
  std::size_t anchor = 0;
  std::size_t tangent_endpoints = 0;  // distinct tangent endpoint nodes
  std::vector<GraphEdge> edges;
};

/// Outer tangents keyed by element uid pair (smaller uid first, as P).
using TangentCache = std::map<std::pair<std::uint32_t, std::uint32_t>, OuterTangents>;

/// Interest points and tangent/arc edges of the given interior-disjoint
/// elements, with pickups and feasibility relative to `anchor`.
TangentGraph build_tangent_graph(std::span<const Element* const> elements, const Point& anchor,
                                 TangentSearch search = TangentSearch::Binary,
                                 TangentCache* cache = nullptr);

/// DP over the graph: best closed curve through the anchor, as in the general
/// engine but restricted to tangents and arcs.
MinResult find_min(const TangentGraph& g, std::span<const Element* const> elements);

/// True iff no two polygons have overlapping interiors.
bool pairwise_disjoint(std::span<const ConvexPolygon> polygons);

/// Disjoint-mode solver. Falls back to solve() (result mode General) when the
/// input or a merged hull overlaps another element, unless
/// options.strict_disjoint is set, in which case NotDisjoint is thrown.
Partition solve_disjoint(std::span<const ConvexPolygon> polygons, const SolveOptions& options = {});

}  // namespace hullpart
