#pragma once

#include <cstdint>
#include <random>

namespace hbpp {

// All randomness in the project flows through mt19937_64 plus the helpers
// below. The engine's output sequence is fixed by the standard, and the
// helpers avoid std::*_distribution (whose algorithms are
// implementation-defined), so seeded results are reproducible across
// compilers and platforms.
using Rng = std::mt19937_64;

/// Derives an independent stream seed from (base, salt) via splitmix64.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t salt);

/// Uniform double in [0, 1) with 53-bit resolution.
double uniform_double(Rng& rng);

/// Uniform integer in [0, bound), bound >= 1. Rejection sampling, no modulo
/// bias.
std::uint64_t uniform_index(Rng& rng, std::uint64_t bound);

/// Gaussian sample via Box-Muller (consumes exactly two engine draws).
double normal_sample(Rng& rng, double mean, double stddev);

}  // namespace hbpp
