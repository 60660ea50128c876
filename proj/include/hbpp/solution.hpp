#pragma once

#include <compare>
#include <filesystem>
#include <vector>

#include "hbpp/subset_pool.hpp"

namespace hbpp {

/// A complete packing: pairwise disjoint bins covering {1..n}. Stored in
/// canonical form (bins ordered by their smallest item index), so two
/// Solutions are equal exactly when they are the same partition regardless of
/// the order the bins were assembled in.
struct Solution {
  std::vector<SubsetMask> bins;

  int num_bins() const { return static_cast<int>(bins.size()); }

  /// Canonicalizes and checks the instance-free invariants (bins nonempty and
  /// pairwise disjoint). Coverage and capacity are checked against an
  /// instance by verify_solution.
  static Solution from_bins(std::vector<SubsetMask> bins);

  friend auto operator<=>(const Solution&, const Solution&) = default;
};

/// Solution file: JSON {num_bins, bins: [[item, ...], ...]} in canonical order.
Solution load_solution(const std::filesystem::path& path, int num_items);
void save_solution(const Solution& solution, const std::filesystem::path& path);

}  // namespace hbpp
