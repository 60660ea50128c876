#include "hbpp/subset_pool.hpp"

#include <bit>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace hbpp {

std::vector<int> mask_to_items(SubsetMask mask) {
  std::vector<int> items;
  items.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask != 0) {
    items.push_back(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return items;
}

SubsetMask items_to_mask(std::span<const int> items, int n) {
  SubsetMask mask = 0;
  for (int item : items) {
    if (item < 1 || item > n) {
      throw std::invalid_argument("items_to_mask: item index " + std::to_string(item) +
                                  " outside 1.." + std::to_string(n));
    }
    mask |= SubsetMask{1} << (item - 1);
  }
  return mask;
}

int mask_weight(SubsetMask mask, std::span<const int> weights) {
  if (weights.size() < 64 && (mask >> weights.size()) != 0) {
    throw std::invalid_argument("mask_weight: mask has more bits than items");
  }
  int total = 0;
  while (mask != 0) {
    total += weights[static_cast<std::size_t>(std::countr_zero(mask))];
    mask &= mask - 1;
  }
  return total;
}

void SubsetPool::add(SubsetMask mask, int weight, int multiplicity,
                     std::optional<int> origin_k) {
  if (mask == 0) throw std::invalid_argument("SubsetPool::add: empty subset");
  auto& info = entries[mask];
  info.weight = weight;
  info.multiplicity += multiplicity;
  if (origin_k) info.origin_k.insert(*origin_k);
}

std::vector<SubsetMask> SubsetPool::masks() const {
  std::vector<SubsetMask> result;
  result.reserve(entries.size());
  for (const auto& [mask, info] : entries) result.push_back(mask);
  return result;
}

SubsetPool load_pool(const std::filesystem::path& path, int num_items) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open pool file: " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("cannot parse pool file " + path.string() + ": " + e.what());
  }
  if (!doc.is_array()) throw std::runtime_error("pool file must be a JSON array: " + path.string());

  SubsetPool pool;
  try {
    for (const auto& entry : doc) {
      const auto items = entry.at("items").get<std::vector<int>>();
      if (items.empty()) throw std::runtime_error("pool entry with empty item list");
      for (std::size_t i = 1; i < items.size(); ++i) {
        if (items[i] <= items[i - 1]) {
          throw std::runtime_error("pool entry items must be strictly ascending");
        }
      }
      const SubsetMask mask = items_to_mask(items, num_items);
      pool.add(mask, entry.at("weight").get<int>(), entry.at("multiplicity").get<int>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("pool file " + path.string() + " has a bad schema: " + e.what());
  }
  return pool;
}

void save_pool(const SubsetPool& pool, const std::filesystem::path& path) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& [mask, info] : pool.entries) {
    doc.push_back({{"items", mask_to_items(mask)},
                   {"weight", info.weight},
                   {"multiplicity", info.multiplicity}});
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write pool file: " + path.string());
  out << doc.dump(2) << "\n";
}

}  // namespace hbpp
