#include "hbpp/heuristic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "hbpp/rng.hpp"

namespace hbpp {

std::optional<Solution> greedy_pass(std::span<const SubsetMask> ordered_subsets, int n) {
  if (n < 1 || n > 63) throw std::invalid_argument("greedy_pass: n must be in 1..63");
  const SubsetMask full = (SubsetMask{1} << n) - 1;
  SubsetMask assigned = 0;
  std::vector<SubsetMask> bins;
  for (SubsetMask subset : ordered_subsets) {
    if (subset == 0 || (subset & ~full) != 0) {
      throw std::invalid_argument("greedy_pass: subset outside items 1..n");
    }
    if ((subset & assigned) != 0) continue;
    assigned |= subset;
    bins.push_back(subset);
    if (assigned == full) return Solution::from_bins(std::move(bins));
  }
  return std::nullopt;
}

HeuristicResult solve(const SubsetPool& pool, int n, long max_iter, std::uint64_t seed,
                      const SolveOptions& options) {
  if (max_iter < 1) throw std::invalid_argument("solve: max_iter must be >= 1");

  // The pool is already deduplicated; multiplicity only matters when the
  // weighted variant is requested.
  std::vector<SubsetMask> base;
  for (const auto& [mask, info] : pool.entries) {
    const int copies = options.weight_by_multiplicity ? std::max(1, info.multiplicity) : 1;
    for (int c = 0; c < copies; ++c) base.push_back(mask);
  }

  HeuristicResult result;
  result.iterations_run = max_iter;
  if (base.empty()) return result;

  std::set<Solution> best_set;
  std::vector<SubsetMask> order(base.size());
  for (long pass = 0; pass < max_iter; ++pass) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(pass)));
    order = base;
    for (std::size_t i = order.size() - 1; i > 0; --i) {
      std::swap(order[i], order[uniform_index(rng, i + 1)]);
    }
    auto solution = greedy_pass(order, n);
    if (!solution) continue;
    ++result.iterations_with_complete_solution;
    const int b = solution->num_bins();
    if (result.best_b == 0 || b < result.best_b) {
      result.best_b = b;
      best_set.clear();
    }
    if (b == result.best_b) best_set.insert(std::move(*solution));
  }
  result.distinct_best.assign(best_set.begin(), best_set.end());
  return result;
}

}  // namespace hbpp
