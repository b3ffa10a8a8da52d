#pragma once

// Brute-force optimum by enumerating every set partition. Exponential; meant
// as ground truth for small instances only.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hullpart/geometry.hpp"
#include "hullpart/partition.hpp"

namespace hullpart {

inline constexpr std::size_t kOracleMaxPolygons = 12;

/// Restricted growth strings of length n in lexicographic order: a[0] = 0 and
/// a[i] <= 1 + max(a[0..i)). Each string is one set partition.
class PartitionEnumerator {
 public:
  /// Throws TooLarge if n > kOracleMaxPolygons.
  explicit PartitionEnumerator(std::size_t n);

  std::span<const std::uint8_t> assignment() const noexcept { return a_; }
  std::size_t blocks() const noexcept;

  /// Advances to the next partition; false once exhausted.
  bool next() noexcept;

 private:
  std::vector<std::uint8_t> a_;
  std::vector<std::uint8_t> prefix_max_;  // max of a[0..i]
};

/// All partitions of {0..n-1} as assignments; Bell(n) entries.
std::vector<std::vector<std::uint8_t>> enumerate_partitions(std::size_t n);

struct OracleResult {
  Partition partition;
  /// Another partition's total is within 1e-9 relative of the optimum.
  bool tie = false;
};

/// Partition minimizing the summed hull perimeters; ties go to fewer
/// components, then the lexicographically smallest assignment.
OracleResult brute_force_optimal(std::span<const ConvexPolygon> polygons);

}  // namespace hullpart
