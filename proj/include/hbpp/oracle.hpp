#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hbpp/instance.hpp"
#include "hbpp/solution.hpp"
#include "hbpp/subset_pool.hpp"

namespace hbpp {

/// Exact reference result: the minimal bin count, the census of every
/// distinct optimal partition, and the ideal subset (all bin configurations
/// appearing in at least one optimum).
struct OracleReport {
  int b_opt = 0;
  std::vector<Solution> optima;          // canonical, sorted
  std::vector<SubsetMask> ideal_subset;  // ascending masks

  std::size_t num_optima() const { return optima.size(); }
  std::size_t ideal_subset_size() const { return ideal_subset.size(); }
};

/// Exhaustive search. Checks the one-bin case first, then grows b by one,
/// enumerating set partitions of the items into exactly b capacity-feasible
/// blocks (restricted-growth encoding, so bin order never multiplies the
/// count) until partitions exist; all partitions at that b become the census.
/// Throws std::invalid_argument when num_items exceeds max_items.
OracleReport brute_force_optimum(const Instance& instance, int max_items = 14);

/// Every nonempty subset with total weight <= capacity, multiplicity 1.
SubsetPool enumerate_feasible_subsets(const Instance& instance, int max_items = 14);

struct VerifyResult {
  bool ok = false;
  std::string violation;  // empty when ok

  explicit operator bool() const { return ok; }
};

/// Checks disjointness, full coverage and per-bin capacity; on failure the
/// result names the violated constraint and the offending bin or item.
VerifyResult verify_solution(const Instance& instance, const Solution& solution);

/// Report file: JSON {b_opt, num_optima, ideal_subset_size, ideal_subset,
/// optima?}. The full optima census is written only when include_optima is
/// set (it can run to thousands of partitions).
void save_report(const OracleReport& report, const std::filesystem::path& path,
                 bool include_optima = false);

}  // namespace hbpp
