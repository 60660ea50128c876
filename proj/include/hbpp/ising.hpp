#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hbpp {

/// Ising form of the capacity penalty
///   H_P = alpha (S - C) + beta (S - C)^2,  S = sum_i w_i x_i,
/// under the spin convention x_i = (1 - sigma_i) / 2 (sigma_i = +1 means the
/// item is absent). Fields are h_i = -w_i (alpha/2 + beta eps_w) with
/// eps_w = sum_i w_i / 2 - C, couplings are J_ij = beta w_i w_j / 2, and the
/// constant offset makes Ising and penalty energies equal for every
/// assignment (not just up to a constant).
struct IsingModel {
  int num_spins = 0;
  std::vector<double> fields;     // h_i, one per spin
  std::vector<double> couplings;  // upper triangle, pair (i, j) with i < j
  double offset = 0.0;

  double coupling(int i, int j) const;  // requires i != j
};

struct ScheduleEntry {
  int k = 0;
  double alpha = 0.0;
  int target_weight = 0;  // k * delta_w
};

/// The alpha sweep of the sampling subroutine: entry k targets subset sum
/// k * delta_w via alpha_k = 2 beta (C - k delta_w), for k = 1..floor(C/delta_w).
struct AlphaSchedule {
  int delta_w = 0;
  std::vector<ScheduleEntry> entries;
};

/// Minimum positive difference between two distinct achievable subset sums.
/// Exact integer computation over the full set of reachable sums.
int min_weight_gap(std::span<const int> weights);

/// Throws std::invalid_argument for delta_w == 0 or beta <= 0.
AlphaSchedule alpha_schedule(int capacity, int delta_w, double beta);

/// Builds the Ising model for one (alpha, beta). Throws for beta <= 0.
IsingModel build_ising(std::span<const int> weights, int capacity, double alpha,
                       double beta);

/// alpha (S - C) + beta (S - C)^2 for the assignment encoded in the low
/// |weights| bits (bit i set means item i+1 is selected).
double penalty_energy(std::span<const int> weights, int capacity, double alpha,
                      double beta, std::uint64_t assignment);

/// Energy of one assignment evaluated through the Ising coefficients.
double ising_energy(const IsingModel& model, std::uint64_t assignment);

/// The 2^n diagonal of H_P in the computational basis; entry b is the Ising
/// energy of assignment b. Throws std::invalid_argument when num_spins
/// exceeds max_qubits.
std::vector<double> hp_diagonal(const IsingModel& model, int max_qubits = 24);

/// Debug dump of (h, J, offset) as a JSON string.
std::string ising_debug_json(const IsingModel& model);

}  // namespace hbpp
