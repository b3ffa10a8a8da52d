#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "hullpart/geometry.hpp"

namespace hullpart {

enum class SolveMode { General, Disjoint };

std::string_view to_string(SolveMode mode) noexcept;

/// One merge performed by the solver: which components were fused, and the
/// perimeter change it caused.
struct MergeEvent {
  std::size_t after_input = 0;  // input index whose insertion triggered the merge
  std::vector<std::vector<std::size_t>> merged;
  double delta = 0.0;
};

/// Grouping of input indices into components, each enclosed by its hull.
struct Partition {
  std::vector<std::vector<std::size_t>> components;
  std::vector<ConvexPolygon> hulls;
  double total = 0.0;
  SolveMode mode = SolveMode::General;
  std::vector<MergeEvent> merge_trace;
};

/// Sorts every component, orders components by smallest member (hulls follow)
/// and recomputes the total.
void canonicalize(Partition& p);

/// Builds a canonical partition from member lists, hulling each component.
Partition make_partition(std::span<const ConvexPolygon> polygons,
                         std::vector<std::vector<std::size_t>> components);

}  // namespace hullpart
