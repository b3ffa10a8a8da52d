#include "hullpart/partition.hpp"

#include <algorithm>
#include <numeric>

namespace hullpart {

std::string_view to_string(SolveMode mode) noexcept {
  return mode == SolveMode::Disjoint ? "disjoint" : "general";
}

void canonicalize(Partition& p) {
  for (auto& c : p.components) std::sort(c.begin(), c.end());
  std::vector<std::size_t> order(p.components.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return p.components[a] < p.components[b]; });
  std::vector<std::vector<std::size_t>> components;
  std::vector<ConvexPolygon> hulls;
  for (std::size_t k : order) {
    components.push_back(std::move(p.components[k]));
    if (k < p.hulls.size()) hulls.push_back(std::move(p.hulls[k]));
  }
  p.components = std::move(components);
  p.hulls = std::move(hulls);
  p.total = 0.0;
  for (const ConvexPolygon& h : p.hulls) p.total += h.perimeter();
}

Partition make_partition(std::span<const ConvexPolygon> polygons,
                         std::vector<std::vector<std::size_t>> components) {
  Partition out;
  for (auto& c : components) {
    std::vector<Point> pts;
    for (std::size_t i : c) {
      pts.insert(pts.end(), polygons[i].vertices().begin(), polygons[i].vertices().end());
    }
    out.hulls.push_back(convex_hull(pts));
    out.components.push_back(std::move(c));
  }
  canonicalize(out);
  return out;
}

}  // namespace hullpart
