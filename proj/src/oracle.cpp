#include "hullpart/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hullpart/errors.hpp"

namespace hullpart {

PartitionEnumerator::PartitionEnumerator(std::size_t n) {
  if (n > kOracleMaxPolygons) throw TooLarge("brute force is limited to 12 polygons");
  a_.assign(n, 0);
  prefix_max_.assign(n, 0);
}

std::size_t PartitionEnumerator::blocks() const noexcept {
  return a_.empty() ? 0 : prefix_max_.back() + 1u;
}

bool PartitionEnumerator::next() noexcept {
  const std::size_t n = a_.size();
  for (std::size_t i = n; i-- > 1;) {
    if (a_[i] <= prefix_max_[i - 1]) {
      ++a_[i];
      prefix_max_[i] = std::max(prefix_max_[i - 1], a_[i]);
      for (std::size_t j = i + 1; j < n; ++j) {
        a_[j] = 0;
        prefix_max_[j] = prefix_max_[i];
      }
      return true;
    }
  }
  return false;
}

std::vector<std::vector<std::uint8_t>> enumerate_partitions(std::size_t n) {
  std::vector<std::vector<std::uint8_t>> out;
  PartitionEnumerator it(n);
  do {
    out.emplace_back(it.assignment().begin(), it.assignment().end());
  } while (it.next());
  return out;
}

OracleResult brute_force_optimal(std::span<const ConvexPolygon> polygons) {
  const std::size_t n = polygons.size();
  PartitionEnumerator it(n);
  if (n == 0) return {};

  double best = std::numeric_limits<double>::infinity();
  double second = best;
  std::size_t best_blocks = 0;
  std::vector<std::uint8_t> best_assignment;
  double scale = 0.0;
  for (const ConvexPolygon& p : polygons) scale += p.perimeter();
  const double tol = 1e-9 * std::max(1.0, scale);

  std::vector<std::vector<Point>> groups;
  do {
    const auto a = it.assignment();
    const std::size_t k = it.blocks();
    groups.assign(k, {});
    for (std::size_t i = 0; i < n; ++i) {
      groups[a[i]].insert(groups[a[i]].end(), polygons[i].vertices().begin(),
                          polygons[i].vertices().end());
    }
    double total = 0.0;
    for (const auto& g : groups) total += convex_hull(g).perimeter();

    if (total < best - tol || (total <= best + tol && k < best_blocks)) {
      second = std::min(second, best);
      best = total;
      best_blocks = k;
      best_assignment.assign(a.begin(), a.end());
    } else {
      second = std::min(second, total);
    }
  } while (it.next());

  std::vector<std::vector<std::size_t>> components(best_blocks);
  for (std::size_t i = 0; i < n; ++i) components[best_assignment[i]].push_back(i);
  OracleResult out;
  out.partition = make_partition(polygons, std::move(components));
  out.tie = std::fabs(second - best) <= tol;
  return out;
}

}  // namespace hullpart
