#include "hbpp/annealer.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <stdexcept>

#include "hbpp/ising.hpp"
#include "hbpp/rng.hpp"

namespace hbpp {

double Statevector::norm_sq() const {
  double total = 0.0;
  for (const auto& a : amplitudes) total += std::norm(a);
  return total;
}

void AnnealParams::validate() const {
  if (shots_per_k < 1) throw std::invalid_argument("AnnealParams: shots_per_k must be >= 1");
  if (beta <= 0.0) throw std::invalid_argument("AnnealParams: beta must be > 0");
  if (tau <= 0.0) throw std::invalid_argument("AnnealParams: tau must be > 0");
  if (n_steps < 1) throw std::invalid_argument("AnnealParams: n_steps must be >= 1");
  if (h0 <= 0.0) throw std::invalid_argument("AnnealParams: h0 must be > 0");
}

Statevector initial_state(int n, double h0) {
  if (n < 1) throw std::invalid_argument("initial_state: n must be >= 1");
  if (h0 <= 0.0) {
    throw std::invalid_argument("initial_state: |-> is the ground state only for h0 > 0");
  }
  Statevector state;
  state.num_qubits = n;
  const std::size_t size = std::size_t{1} << n;
  const double scale = 1.0 / std::sqrt(static_cast<double>(size));
  state.amplitudes.resize(size);
  for (std::size_t b = 0; b < size; ++b) {
    state.amplitudes[b] = (std::popcount(b) % 2 == 0) ? scale : -scale;
  }
  return state;
}

namespace {

// exp(-i theta sigma_x) on the given qubit: [[cos, -i sin], [-i sin, cos]].
void apply_sigma_x_rotation(std::vector<std::complex<double>>& amp, int qubit, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const std::complex<double> minus_i_s(0.0, -s);
  const std::size_t mask = std::size_t{1} << qubit;
  const std::size_t lo_mask = mask - 1;
  const std::size_t hi_mask = ~lo_mask;
  const std::size_t half = amp.size() >> 1;
  for (std::size_t i = 0; i < half; ++i) {
    const std::size_t i0 = ((i & hi_mask) << 1) | (i & lo_mask);
    const std::size_t i1 = i0 | mask;
    const std::complex<double> a0 = amp[i0];
    const std::complex<double> a1 = amp[i1];
    amp[i0] = c * a0 + minus_i_s * a1;
    amp[i1] = minus_i_s * a0 + c * a1;
  }
}

}  // namespace

void evolve(Statevector& state, std::span<const double> hp_diag, const AnnealParams& params) {
  const std::size_t size = state.amplitudes.size();
  if (hp_diag.size() != size) {
    throw std::invalid_argument("evolve: hp_diag length does not match the statevector");
  }
  if (params.n_steps < 1) throw std::invalid_argument("evolve: n_steps must be >= 1");
  const double dt = params.tau / static_cast<double>(params.n_steps);
  for (int m = 1; m <= params.n_steps; ++m) {
    const double lambda = static_cast<double>(m) / static_cast<double>(params.n_steps);
    const double phase_scale = lambda * dt;
    for (std::size_t b = 0; b < size; ++b) {
      state.amplitudes[b] *= std::polar(1.0, -phase_scale * hp_diag[b]);
    }
    const double theta = (1.0 - lambda) * dt * params.h0;
    if (theta != 0.0) {
      for (int qubit = 0; qubit < state.num_qubits; ++qubit) {
        apply_sigma_x_rotation(state.amplitudes, qubit, theta);
      }
    }
  }
}

std::vector<std::uint64_t> measure(const Statevector& state, int shots, std::uint64_t rng_seed) {
  if (shots < 1) throw std::invalid_argument("measure: shots must be >= 1");
  std::vector<double> cumulative(state.amplitudes.size());
  double total = 0.0;
  for (std::size_t b = 0; b < state.amplitudes.size(); ++b) {
    total += std::norm(state.amplitudes[b]);
    cumulative[b] = total;
  }
  if (total <= 0.0) throw std::invalid_argument("measure: state has zero norm");

  Rng rng(rng_seed);
  std::vector<std::uint64_t> samples;
  samples.reserve(static_cast<std::size_t>(shots));
  for (int s = 0; s < shots; ++s) {
    const double u = uniform_double(rng) * total;
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    const std::size_t index = std::min(static_cast<std::size_t>(it - cumulative.begin()),
                                       cumulative.size() - 1);
    samples.push_back(static_cast<std::uint64_t>(index));
  }
  return samples;
}

SampleResult sample_subsets(const Instance& instance, const AnnealParams& params,
                            std::uint64_t seed, int num_threads, int max_qubits) {
  instance.validate();
  params.validate();
  const int n = instance.num_items;
  if (n > max_qubits) {
    throw std::invalid_argument("sample_subsets: instance exceeds the qubit cap of " +
                                std::to_string(max_qubits));
  }

  const int delta_w = min_weight_gap(instance.weights);
  const AlphaSchedule schedule = alpha_schedule(instance.capacity, delta_w, params.beta);

  // One anneal per schedule entry; entries are independent given their
  // derived RNG streams, so they can run on any number of threads.
  auto run_entry = [&](const ScheduleEntry& entry) {
    const IsingModel ising =
        build_ising(instance.weights, instance.capacity, entry.alpha, params.beta);
    const std::vector<double> diag = hp_diagonal(ising, max_qubits);
    Statevector state = initial_state(n, params.h0);
    evolve(state, diag, params);
    return measure(state, params.shots_per_k, mix_seed(seed, static_cast<std::uint64_t>(entry.k)));
  };

  std::vector<std::vector<std::uint64_t>> samples_per_entry(schedule.entries.size());
  if (num_threads > 1 && schedule.entries.size() > 1) {
    std::vector<std::future<void>> tasks;
    std::atomic<std::size_t> next{0};
    const int workers = std::min<int>(num_threads, static_cast<int>(schedule.entries.size()));
    for (int t = 0; t < workers; ++t) {
      tasks.push_back(std::async(std::launch::async, [&]() {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= schedule.entries.size()) return;
          samples_per_entry[i] = run_entry(schedule.entries[i]);
        }
      }));
    }
    for (auto& task : tasks) task.get();
  } else {
    for (std::size_t i = 0; i < schedule.entries.size(); ++i) {
      samples_per_entry[i] = run_entry(schedule.entries[i]);
    }
  }

  // Merge in k order so multiplicities and first-seen counts are independent
  // of scheduling.
  SampleResult result;
  result.per_k.reserve(schedule.entries.size());
  for (std::size_t i = 0; i < schedule.entries.size(); ++i) {
    const ScheduleEntry& entry = schedule.entries[i];
    KDiagnostics diag;
    diag.k = entry.k;
    diag.alpha = entry.alpha;
    diag.target_weight = entry.target_weight;
    diag.shots = params.shots_per_k;
    int feasible = 0;
    for (std::uint64_t b : samples_per_entry[i]) {
      if (b == 0) continue;  // empty subset: never pooled
      const int weight = mask_weight(b, instance.weights);
      if (weight > instance.capacity) continue;
      ++feasible;
      if (!result.pool.contains(b)) ++diag.distinct_new_subsets;
      result.pool.add(b, weight, 1, entry.k);
    }
    diag.feasible_fraction = static_cast<double>(feasible) / static_cast<double>(diag.shots);
    result.per_k.push_back(diag);
  }
  return result;
}

void augment_with_singletons(SubsetPool& pool, const Instance& instance) {
  instance.validate();
  for (int i = 0; i < instance.num_items; ++i) {
    const SubsetMask mask = SubsetMask{1} << i;
    if (!pool.contains(mask)) {
      pool.add(mask, instance.weights[static_cast<std::size_t>(i)], 0);
    }
  }
}

void save_diagnostics_csv(std::span<const KDiagnostics> diagnostics,
                          const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write diagnostics file: " + path.string());
  out << "k,alpha,target_weight,shots,feasible_fraction,distinct_new_subsets\n";
  char line[160];
  for (const KDiagnostics& d : diagnostics) {
    std::snprintf(line, sizeof(line), "%d,%.6g,%d,%d,%.6f,%d\n", d.k, d.alpha, d.target_weight,
                  d.shots, d.feasible_fraction, d.distinct_new_subsets);
    out << line;
  }
}

}  // namespace hbpp
