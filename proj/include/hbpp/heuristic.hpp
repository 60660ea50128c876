#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hbpp/solution.hpp"
#include "hbpp/subset_pool.hpp"

namespace hbpp {

struct HeuristicResult {
  int best_b = 0;  // 0 when no pass completed a solution
  std::vector<Solution> distinct_best;  // canonical, deduplicated, sorted
  long iterations_run = 0;
  long iterations_with_complete_solution = 0;

  bool found() const { return iterations_with_complete_solution > 0; }
};

struct SolveOptions {
  /// When set, each subset enters the shuffled list once per sampled
  /// multiplicity instead of once overall.
  bool weight_by_multiplicity = false;
};

/// One greedy construction pass: scans the subsets in the given order,
/// accepts a subset exactly when it is disjoint from everything accepted so
/// far, and returns the solution as soon as the accepted items cover {1..n}.
/// Returns nullopt when the scan ends with items uncovered; that is a normal
/// outcome, not an error.
std::optional<Solution> greedy_pass(std::span<const SubsetMask> ordered_subsets, int n);

/// Runs max_iter independent greedy passes, each over a fresh uniform shuffle
/// of the deduplicated pool, and keeps every distinct minimum-bin solution
/// seen. Pass c draws its shuffle from the (seed, c) stream, so the result is
/// reproducible and independent of how passes would be scheduled.
HeuristicResult solve(const SubsetPool& pool, int n, long max_iter, std::uint64_t seed,
                      const SolveOptions& options = {});

}  // namespace hbpp
