#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

namespace hbpp {

/// Item subsets are bitmasks: bit i (least significant bit first) stores item
/// i+1, so the basis index of a measured bitstring is directly the subset
/// mask. The same convention is used by hp_diagonal and measure.
using SubsetMask = std::uint64_t;

/// Item indices (1-based, ascending) of a mask.
std::vector<int> mask_to_items(SubsetMask mask);

/// Inverse of mask_to_items; items must be in 1..n. Throws std::invalid_argument.
SubsetMask items_to_mask(std::span<const int> items, int n);

/// Total weight of the masked items.
int mask_weight(SubsetMask mask, std::span<const int> weights);

struct SubsetInfo {
  int weight = 0;
  int multiplicity = 0;       // times sampled; 0 for injected subsets
  std::set<int> origin_k;     // schedule entries that produced the subset
};

/// Deduplicated collection of feasible single-bin item subsets. Keyed by mask
/// so iteration order (and every serialization) is deterministic.
struct SubsetPool {
  std::map<SubsetMask, SubsetInfo> entries;

  /// Merges one observation into the pool. Empty subsets are rejected.
  void add(SubsetMask mask, int weight, int multiplicity = 1,
           std::optional<int> origin_k = std::nullopt);

  bool contains(SubsetMask mask) const { return entries.count(mask) != 0; }
  std::size_t size() const { return entries.size(); }

  /// All masks in ascending order.
  std::vector<SubsetMask> masks() const;
};

/// Pool file: JSON array of {items, weight, multiplicity}. load_pool throws
/// std::runtime_error on I/O or schema violations.
SubsetPool load_pool(const std::filesystem::path& path, int num_items);
void save_pool(const SubsetPool& pool, const std::filesystem::path& path);

}  // namespace hbpp
