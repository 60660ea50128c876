#include "hbpp/oracle.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hbpp {

namespace {

// Enumerates set partitions of {0..n-1} into exactly num_blocks blocks, each
// within capacity. Restricted-growth order: item 0 opens block 0, and item i
// may join an existing block or open the next one, which collapses bin-label
// symmetry by construction. Blocks are capacity-checked as they grow.
class PartitionEnumerator {
 public:
  PartitionEnumerator(const std::vector<int>& weights, int capacity, int num_blocks)
      : weights_(weights),
        capacity_(capacity),
        num_blocks_(num_blocks),
        block_mask_(static_cast<std::size_t>(num_blocks), 0),
        block_sum_(static_cast<std::size_t>(num_blocks), 0) {}

  std::vector<Solution> run() {
    solutions_.clear();
    recurse(0, 0);
    return std::move(solutions_);
  }

 private:
  void recurse(int item, int open_blocks) {
    const int n = static_cast<int>(weights_.size());
    if (n - item < num_blocks_ - open_blocks) return;  // not enough items left
    if (item == n) {
      if (open_blocks == num_blocks_) {
        std::vector<SubsetMask> bins(block_mask_.begin(),
                                     block_mask_.begin() + open_blocks);
        solutions_.push_back(Solution::from_bins(std::move(bins)));
      }
      return;
    }
    const int w = weights_[static_cast<std::size_t>(item)];
    const SubsetMask bit = SubsetMask{1} << item;
    for (int block = 0; block < open_blocks; ++block) {
      if (block_sum_[static_cast<std::size_t>(block)] + w > capacity_) continue;
      block_mask_[static_cast<std::size_t>(block)] |= bit;
      block_sum_[static_cast<std::size_t>(block)] += w;
      recurse(item + 1, open_blocks);
      block_mask_[static_cast<std::size_t>(block)] &= ~bit;
      block_sum_[static_cast<std::size_t>(block)] -= w;
    }
    if (open_blocks < num_blocks_) {
      block_mask_[static_cast<std::size_t>(open_blocks)] = bit;
      block_sum_[static_cast<std::size_t>(open_blocks)] = w;
      recurse(item + 1, open_blocks + 1);
      block_mask_[static_cast<std::size_t>(open_blocks)] = 0;
      block_sum_[static_cast<std::size_t>(open_blocks)] = 0;
    }
  }

  const std::vector<int>& weights_;
  int capacity_;
  int num_blocks_;
  std::vector<SubsetMask> block_mask_;
  std::vector<int> block_sum_;
  std::vector<Solution> solutions_;
};

}  // namespace

OracleReport brute_force_optimum(const Instance& instance, int max_items) {
  instance.validate();
  if (instance.num_items > max_items) {
    std::ostringstream msg;
    msg << "brute_force_optimum: " << instance.num_items << " items exceed the cap of "
        << max_items;
    throw std::invalid_argument(msg.str());
  }

  OracleReport report;
  if (instance.total_weight() <= instance.capacity) {
    const SubsetMask all = (SubsetMask{1} << instance.num_items) - 1;
    report.b_opt = 1;
    report.optima.push_back(Solution::from_bins({all}));
    report.ideal_subset.push_back(all);
    return report;
  }

  for (int b = 2; b <= instance.num_items; ++b) {
    PartitionEnumerator enumerator(instance.weights, instance.capacity, b);
    std::vector<Solution> found = enumerator.run();
    if (found.empty()) continue;
    std::sort(found.begin(), found.end());
    report.b_opt = b;
    report.optima = std::move(found);
    std::set<SubsetMask> ideal;
    for (const Solution& solution : report.optima) {
      ideal.insert(solution.bins.begin(), solution.bins.end());
    }
    report.ideal_subset.assign(ideal.begin(), ideal.end());
    return report;
  }
  // Unreachable: singletons are always feasible, so b = num_items succeeds.
  throw std::logic_error("brute_force_optimum: no feasible partition found");
}

SubsetPool enumerate_feasible_subsets(const Instance& instance, int max_items) {
  instance.validate();
  if (instance.num_items > max_items) {
    std::ostringstream msg;
    msg << "enumerate_feasible_subsets: " << instance.num_items << " items exceed the cap of "
        << max_items;
    throw std::invalid_argument(msg.str());
  }
  SubsetPool pool;
  const std::uint64_t size = std::uint64_t{1} << instance.num_items;
  for (std::uint64_t mask = 1; mask < size; ++mask) {
    const int weight = mask_weight(mask, instance.weights);
    if (weight <= instance.capacity) pool.add(mask, weight, 1);
  }
  return pool;
}

VerifyResult verify_solution(const Instance& instance, const Solution& solution) {
  const int n = instance.num_items;
  const SubsetMask full = (SubsetMask{1} << n) - 1;
  SubsetMask assigned = 0;
  for (std::size_t j = 0; j < solution.bins.size(); ++j) {
    const SubsetMask bin = solution.bins[j];
    if (bin == 0) {
      return {false, "bin " + std::to_string(j + 1) + " is empty"};
    }
    if ((bin & ~full) != 0) {
      return {false, "bin " + std::to_string(j + 1) + " references an item outside 1.." +
                         std::to_string(n)};
    }
    if ((bin & assigned) != 0) {
      const int item = std::countr_zero(bin & assigned) + 1;
      return {false, "item " + std::to_string(item) + " assigned twice"};
    }
    assigned |= bin;
    const int weight = mask_weight(bin, instance.weights);
    if (weight > instance.capacity) {
      return {false, "capacity violated in bin " + std::to_string(j + 1) + " (weight " +
                         std::to_string(weight) + " > " + std::to_string(instance.capacity) + ")"};
    }
  }
  if (assigned != full) {
    const int item = std::countr_zero(~assigned & full) + 1;
    return {false, "item " + std::to_string(item) + " is not assigned to any bin"};
  }
  return {true, ""};
}

void save_report(const OracleReport& report, const std::filesystem::path& path,
                 bool include_optima) {
  nlohmann::json ideal = nlohmann::json::array();
  for (SubsetMask mask : report.ideal_subset) ideal.push_back(mask_to_items(mask));
  nlohmann::json doc{{"b_opt", report.b_opt},
                     {"num_optima", report.num_optima()},
                     {"ideal_subset_size", report.ideal_subset_size()},
                     {"ideal_subset", ideal}};
  if (include_optima) {
    nlohmann::json optima = nlohmann::json::array();
    for (const Solution& solution : report.optima) {
      nlohmann::json bins = nlohmann::json::array();
      for (SubsetMask bin : solution.bins) bins.push_back(mask_to_items(bin));
      optima.push_back({{"num_bins", solution.num_bins()}, {"bins", bins}});
    }
    doc["optima"] = optima;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write report file: " + path.string());
  out << doc.dump(2) << "\n";
}

}  // namespace hbpp
