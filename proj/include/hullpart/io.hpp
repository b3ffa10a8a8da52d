#pragma once

// Instance and result files (JSON), SVG rendering and random instances.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hullpart/geometry.hpp"
#include "hullpart/partition.hpp"

namespace hullpart {

struct Instance {
  std::vector<ConvexPolygon> polygons;
  std::optional<std::string> name;
  std::optional<double> expected_total;
};

/// Parses {"polygons": [[[x, y], ...], ...], "meta": {...}}. Each polygon is
/// replaced by the convex hull of its points. Throws ParseError or
/// DegenerateInput.
Instance parse_instance(std::string_view text);

/// Shortest round-trip coordinates, so parse(write(x)) == x.
std::string write_instance(const Instance& instance);

/// Canonical result JSON; reals rounded to 12 significant digits.
std::string write_result(const Partition& partition);

/// Inputs as gray filled paths, component hulls as colored outlines.
std::string render_svg(const Instance& instance, const Partition& partition);

enum class GenMode { General, Disjoint };

/// n random convex polygons with at most m vertices each: points on random
/// ellipses, hulled. Disjoint mode keeps every polygon inside its own grid
/// cell. Deterministic in seed.
Instance generate_instance(std::size_t n, std::size_t m, GenMode mode, std::uint64_t seed);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace hullpart
