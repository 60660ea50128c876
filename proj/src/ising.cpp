#include "hbpp/ising.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hbpp {

namespace {

// Index of unordered pair (i, j), i < j, in the flattened upper triangle.
inline std::size_t pair_index(int i, int j) {
  return static_cast<std::size_t>(j) * (j - 1) / 2 + static_cast<std::size_t>(i);
}

}  // namespace

double IsingModel::coupling(int i, int j) const {
  if (i == j) throw std::invalid_argument("IsingModel::coupling: no self-couplings");
  if (i > j) std::swap(i, j);
  return couplings[pair_index(i, j)];
}

int min_weight_gap(std::span<const int> weights) {
  if (weights.empty()) throw std::invalid_argument("min_weight_gap: need at least one weight");
  long long total = 0;
  for (int w : weights) {
    if (w < 1) throw std::invalid_argument("min_weight_gap: weights must be positive");
    total += w;
  }
  // Reachability DP over subset sums; equivalent to enumerating all 2^n sums
  // and deduplicating, but O(n * total).
  std::vector<char> reachable(static_cast<std::size_t>(total) + 1, 0);
  reachable[0] = 1;
  for (int w : weights) {
    for (long long s = total - w; s >= 0; --s) {
      if (reachable[static_cast<std::size_t>(s)]) reachable[static_cast<std::size_t>(s + w)] = 1;
    }
  }
  long long best = total;  // {0, w_min} always differ, so a gap exists
  long long prev = 0;
  for (long long s = 1; s <= total; ++s) {
    if (!reachable[static_cast<std::size_t>(s)]) continue;
    best = std::min(best, s - prev);
    prev = s;
  }
  return static_cast<int>(best);
}

AlphaSchedule alpha_schedule(int capacity, int delta_w, double beta) {
  if (delta_w < 1) throw std::invalid_argument("alpha_schedule: delta_w must be >= 1");
  if (beta <= 0.0) throw std::invalid_argument("alpha_schedule: beta must be > 0");
  AlphaSchedule schedule;
  schedule.delta_w = delta_w;
  const int num_entries = capacity / delta_w;
  schedule.entries.reserve(static_cast<std::size_t>(num_entries));
  for (int k = 1; k <= num_entries; ++k) {
    ScheduleEntry entry;
    entry.k = k;
    entry.target_weight = k * delta_w;
    entry.alpha = 2.0 * beta * static_cast<double>(capacity - entry.target_weight);
    schedule.entries.push_back(entry);
  }
  return schedule;
}

IsingModel build_ising(std::span<const int> weights, int capacity, double alpha, double beta) {
  if (beta <= 0.0) throw std::invalid_argument("build_ising: beta must be > 0");
  const int n = static_cast<int>(weights.size());
  IsingModel model;
  model.num_spins = n;

  long long total = 0;
  long long sum_sq = 0;
  for (int w : weights) {
    total += w;
    sum_sq += static_cast<long long>(w) * w;
  }
  const double eps_w = static_cast<double>(total) / 2.0 - static_cast<double>(capacity);

  model.fields.reserve(static_cast<std::size_t>(n));
  for (int w : weights) {
    model.fields.push_back(-static_cast<double>(w) * (alpha / 2.0 + beta * eps_w));
  }
  model.couplings.resize(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      model.couplings[pair_index(i, j)] =
          beta * static_cast<double>(weights[i]) * static_cast<double>(weights[j]) / 2.0;
    }
  }
  // Constant term of the expansion of the penalty form in sigma variables.
  model.offset = alpha * eps_w + beta * eps_w * eps_w + beta * static_cast<double>(sum_sq) / 4.0;
  return model;
}

double penalty_energy(std::span<const int> weights, int capacity, double alpha, double beta,
                      std::uint64_t assignment) {
  const int n = static_cast<int>(weights.size());
  if (n < 64 && (assignment >> n) != 0) {
    throw std::invalid_argument("penalty_energy: assignment has more bits than items");
  }
  long long s = 0;
  for (int i = 0; i < n; ++i) {
    if ((assignment >> i) & 1ULL) s += weights[static_cast<std::size_t>(i)];
  }
  const double d = static_cast<double>(s - capacity);
  return alpha * d + beta * d * d;
}

double ising_energy(const IsingModel& model, std::uint64_t assignment) {
  const int n = model.num_spins;
  if (n < 64 && (assignment >> n) != 0) {
    throw std::invalid_argument("ising_energy: assignment has more bits than spins");
  }
  double energy = model.offset;
  for (int j = 0; j < n; ++j) {
    const double sj = ((assignment >> j) & 1ULL) ? -1.0 : 1.0;
    energy += model.fields[static_cast<std::size_t>(j)] * sj;
    for (int i = 0; i < j; ++i) {
      const double si = ((assignment >> i) & 1ULL) ? -1.0 : 1.0;
      energy += model.couplings[pair_index(i, j)] * si * sj;
    }
  }
  return energy;
}

std::vector<double> hp_diagonal(const IsingModel& model, int max_qubits) {
  if (model.num_spins > max_qubits) {
    std::ostringstream msg;
    msg << "hp_diagonal: " << model.num_spins << " spins exceed the cap of " << max_qubits;
    throw std::invalid_argument(msg.str());
  }
  const std::size_t size = std::size_t{1} << model.num_spins;
  std::vector<double> diagonal(size);
  for (std::size_t b = 0; b < size; ++b) diagonal[b] = ising_energy(model, b);
  return diagonal;
}

std::string ising_debug_json(const IsingModel& model) {
  nlohmann::json couplings = nlohmann::json::array();
  for (int j = 1; j < model.num_spins; ++j) {
    for (int i = 0; i < j; ++i) {
      couplings.push_back({{"i", i + 1}, {"j", j + 1}, {"value", model.coupling(i, j)}});
    }
  }
  nlohmann::json doc{{"num_spins", model.num_spins},
                     {"fields", model.fields},
                     {"couplings", couplings},
                     {"offset", model.offset}};
  return doc.dump(2);
}

}  // namespace hbpp
