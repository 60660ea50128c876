#include "hbpp/solution.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace hbpp {

Solution Solution::from_bins(std::vector<SubsetMask> bins) {
  SubsetMask seen = 0;
  for (SubsetMask bin : bins) {
    if (bin == 0) throw std::invalid_argument("Solution: empty bin");
    if ((bin & seen) != 0) throw std::invalid_argument("Solution: bins are not disjoint");
    seen |= bin;
  }
  // Disjoint bins have distinct lowest items, so this order is total.
  std::sort(bins.begin(), bins.end(),
            [](SubsetMask a, SubsetMask b) { return std::countr_zero(a) < std::countr_zero(b); });
  Solution solution;
  solution.bins = std::move(bins);
  return solution;
}

Solution load_solution(const std::filesystem::path& path, int num_items) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open solution file: " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("cannot parse solution file " + path.string() + ": " + e.what());
  }
  std::vector<SubsetMask> bins;
  try {
    for (const auto& bin : doc.at("bins")) {
      bins.push_back(items_to_mask(bin.get<std::vector<int>>(), num_items));
    }
    if (doc.at("num_bins").get<int>() != static_cast<int>(bins.size())) {
      throw std::runtime_error("solution file num_bins does not match bin count");
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("solution file " + path.string() + " has a bad schema: " + e.what());
  }
  return Solution::from_bins(std::move(bins));
}

void save_solution(const Solution& solution, const std::filesystem::path& path) {
  nlohmann::json bins = nlohmann::json::array();
  for (SubsetMask bin : solution.bins) bins.push_back(mask_to_items(bin));
  nlohmann::json doc{{"num_bins", solution.num_bins()}, {"bins", bins}};
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write solution file: " + path.string());
  out << doc.dump(2) << "\n";
}

}  // namespace hbpp
