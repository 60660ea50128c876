#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "hbpp/instance.hpp"
#include "hbpp/subset_pool.hpp"

namespace hbpp {

/// Default total evolution time (dimensionless). Calibrated on an n=6
/// reference instance so the sampler recovers every feasible subset and
/// concentrates well above uniform sampling; the value is a free parameter of
/// the simulation, not a physical time.
inline constexpr double kDefaultTau = 2.0;

/// Full statevector over the computational basis; basis index b encodes the
/// assignment whose bit i selects item i+1.
struct Statevector {
  int num_qubits = 0;
  std::vector<std::complex<double>> amplitudes;

  double norm_sq() const;
};

/// Parameters of the digitized annealing evolution and its shot budget.
struct AnnealParams {
  int shots_per_k = 1000;   // measurement samples per schedule entry
  double beta = 1.0;        // quadratic penalty strength
  double tau = kDefaultTau; // total evolution time
  int n_steps = 500;        // number of Trotter steps
  double h0 = 10.0;         // transverse field strength

  /// Throws std::invalid_argument unless every field is strictly positive.
  void validate() const;
};

/// Per-schedule-entry sampling diagnostics.
struct KDiagnostics {
  int k = 0;
  double alpha = 0.0;
  int target_weight = 0;
  int shots = 0;
  double feasible_fraction = 0.0;  // feasible nonempty samples / shots
  int distinct_new_subsets = 0;    // subsets first seen at this entry
};

struct SampleResult {
  SubsetPool pool;
  std::vector<KDiagnostics> per_k;
};

/// Ground state of H_0 = sum_j h0 sigma_x^j for h0 > 0: the product of |->
/// states, amplitude (-1)^popcount(b) / sqrt(2^n).
Statevector initial_state(int n, double h0);

/// Applies n_steps first-order split steps in place. Step m (1-based) uses
/// lambda_m = m / n_steps and dt = tau / n_steps: first the diagonal phase
/// exp(-i lambda_m dt hp_diag[b]), then per qubit the transverse rotation
/// exp(-i (1 - lambda_m) dt h0 sigma_x). Throws on dimension mismatch.
void evolve(Statevector& state, std::span<const double> hp_diag, const AnnealParams& params);

/// Draws `shots` i.i.d. basis indices from |amplitude|^2. Deterministic for a
/// fixed seed.
std::vector<std::uint64_t> measure(const Statevector& state, int shots, std::uint64_t rng_seed);

/// Runs the full subset-sampling sweep: for every schedule entry k, anneals
/// under H_P(alpha_k) and measures shots_per_k samples; empty and
/// over-capacity subsets are discarded, the rest are pooled with
/// deduplication. Per-entry RNG streams derive from (seed, k), so the result
/// is identical whether entries run sequentially or on num_threads threads.
SampleResult sample_subsets(const Instance& instance, const AnnealParams& params,
                            std::uint64_t seed, int num_threads = 1, int max_qubits = 24);

/// Ensures every singleton {i} is present (each is feasible since w_i <= C).
/// Injected singletons carry multiplicity 0. Idempotent.
void augment_with_singletons(SubsetPool& pool, const Instance& instance);

/// Diagnostics CSV: k, alpha, target_weight, shots, feasible_fraction,
/// distinct_new_subsets.
void save_diagnostics_csv(std::span<const KDiagnostics> diagnostics,
                          const std::filesystem::path& path);

}  // namespace hbpp
