#pragma once

// Incremental merge solver for the minimum total hull perimeter partition.
//
// Polygons enter in decreasing order of their minimum vertex. After each
// insertion the working set is kept optimal by repeatedly finding, with an
// angular-sweep DP anchored at the newest minimum vertex, the enclosable set S
// minimizing delta(S) = H(S) - sum of member perimeters, and merging it while
// that minimum is non-positive.
//
// For every ordered vertex pair (u, v) the DP needs
//   gamma(u, v) = |uv| - Y(u, v),
// where Y adds the perimeter of each element whose upward interior-point ray
// u -> v crosses left to right and subtracts it for right to left, and whether
// uv avoids every element's open interior. Both are tabulated and updated
// incrementally on insertions and merges.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hullpart/geometry.hpp"
#include "hullpart/partition.hpp"

namespace hullpart {

using Clock = std::chrono::steady_clock;

enum class GammaSource { Table, Naive };
enum class TangentSearch { Binary, Linear };

class WorkingSet;

struct EngineEvent {
  enum class Kind { Added, Merged };
  Kind kind = Kind::Added;
  std::size_t input = 0;  // most recently added input index
};

struct SolveOptions {
  GammaSource gamma_source = GammaSource::Table;
  TangentSearch tangent_search = TangentSearch::Binary;
  /// Disjoint mode only: throw NotDisjoint instead of falling back.
  bool strict_disjoint = false;
  /// Throws SolveCancelled once passed.
  std::optional<Clock::time_point> deadline;
  /// General mode only: called after every insertion and merge.
  std::function<void(const WorkingSet&, const EngineEvent&)> on_event;
};

/// An element of the working set: a hull and the inputs merged into it.
struct Element {
  std::uint32_t uid = 0;
  ConvexPolygon hull;
  std::vector<std::size_t> members;
};

struct MinResult {
  std::vector<std::uint32_t> elements;  // uids enclosed by the best curve
  double delta = 0.0;                   // sum of gamma along the curve
  std::vector<Point> curve;             // closed: starts and ends at the anchor
};

struct TableCheck {
  std::size_t pairs = 0;
  double max_gamma_error = 0.0;
  std::size_t free_mismatches = 0;
  std::size_t count_mismatches = 0;
};

class WorkingSet {
 public:
  explicit WorkingSet(GammaSource source = GammaSource::Table) : source_(source) {}

  /// Adds p as a singleton element and moves the anchor to its min vertex.
  /// Throws OrderViolation if some current vertex precedes that min vertex.
  void add_polygon(const ConvexPolygon& p, std::size_t index);

  /// Best closed curve through the anchor, monotone in angle, built from
  /// free vertex-to-vertex segments.
  MinResult find_min() const;

  /// Replaces the given elements (at least two) by their common hull.
  std::uint32_t apply_merge(std::span<const std::uint32_t> uids);

  /// gamma by direct evaluation over the current elements.
  double gamma(const Point& u, const Point& v) const;

  double delta(std::span<const std::uint32_t> uids) const;

  /// Live elements in creation order.
  std::vector<const Element*> elements() const;
  const Element& element(std::uint32_t uid) const { return *elements_.at(uid); }
  std::size_t element_count() const noexcept { return alive_elements_; }

  const Point& anchor() const noexcept { return slots_[anchor_slot_].p; }
  std::uint32_t anchor_element() const noexcept { return slots_[anchor_slot_].owner; }

  /// Number of live vertex slots (duplicated points counted separately).
  std::size_t vertex_count() const noexcept { return alive_slots_; }

  /// Recomputes every table entry from scratch and reports disagreements.
  TableCheck check_tables() const;

  void set_deadline(std::optional<Clock::time_point> deadline) noexcept { deadline_ = deadline; }

 private:
  struct Slot {
    Point p;
    std::uint32_t owner = 0;
    std::size_t vertex = 0;  // index in the owner's hull
    bool alive = true;
  };

  double pickup(std::size_t a, std::size_t b) const noexcept;
  bool is_free(std::size_t a, std::size_t b) const noexcept;
  double table_gamma(std::size_t a, std::size_t b) const noexcept;
  bool hits(std::size_t a, std::size_t b, const Element& e) const noexcept;
  void tick(std::size_t& counter) const;

  GammaSource source_;
  std::optional<Clock::time_point> deadline_;
  std::vector<std::optional<Element>> elements_;  // indexed by uid
  std::size_t alive_elements_ = 0;
  std::vector<Slot> slots_;
  std::size_t alive_slots_ = 0;
  std::size_t anchor_slot_ = 0;
  // Row hi, column lo < hi: Y(lo -> hi) and the number of elements whose
  // interior the segment meets.
  std::vector<std::vector<double>> pickup_;
  std::vector<std::vector<std::uint16_t>> blockers_;
};

/// Upper bound on tabulated vertex pairs (about 2.5 GB).
inline constexpr std::size_t kMaxTablePairs = 250'000'000;

/// Throws TooLarge if tables over this many vertices would exceed
/// kMaxTablePairs.
void check_table_size(std::size_t vertices);

/// Merge tolerance for an instance: 1e-9 of its bounding-box diagonal.
double merge_tolerance(std::span<const ConvexPolygon> polygons) noexcept;

/// Input indices in processing order: decreasing min vertex, ties by index.
std::vector<std::size_t> insertion_order(std::span<const ConvexPolygon> polygons);

/// General-position solver over all vertex pairs.
Partition solve(std::span<const ConvexPolygon> polygons, const SolveOptions& options = {});

}  // namespace hullpart
