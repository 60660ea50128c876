#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hbpp/annealer.hpp"
#include "hbpp/heuristic.hpp"
#include "hbpp/instance.hpp"
#include "hbpp/oracle.hpp"

namespace hbpp {

/// An instance reference in a benchmark config: either a file on disk or a
/// generator specification.
struct InstanceSpec {
  std::optional<std::filesystem::path> path;
  struct Generate {
    int n = 0;
    int capacity = 0;
    Distribution distribution = Distribution::Uniform;
    std::uint64_t seed = 0;
  };
  std::optional<Generate> generate;
};

struct BenchmarkConfig {
  std::vector<InstanceSpec> instances;
  int runs_per_instance = 10;
  int shots_per_k = 1000;
  double beta_scale = 0.2;  // beta = beta_scale * min_j w_j
  double tau = kDefaultTau;
  int n_steps = 500;
  double h0 = 10.0;
  long max_iter = 10000;
  std::uint64_t master_seed = 1;
  std::filesystem::path output_dir = "bench_out";
  bool include_singletons = true;
  bool store_artifacts = true;  // per-run pool and solution files
  bool record_timings = true;   // false writes 0.000 stage times (reproducible bytes)
  int num_threads = 1;
};

/// Reads a JSON config mirroring BenchmarkConfig. Unknown keys are rejected.
BenchmarkConfig load_config(const std::filesystem::path& path);

/// One full H-BPP run: subset sampling, optional singleton augmentation, then
/// the greedy restart heuristic. Deterministic for a fixed seed.
struct RunOutput {
  SubsetPool sampled_pool;  // raw sampler output (the paper's F)
  SubsetPool solver_pool;   // pool handed to the heuristic (augmented if enabled)
  std::vector<KDiagnostics> diagnostics;
  HeuristicResult result;
  double seconds_anneal = 0.0;
  double seconds_heuristic = 0.0;
};
RunOutput run_hbpp(const Instance& instance, const AnnealParams& params, long max_iter,
                   std::uint64_t seed, bool include_singletons = true, int num_threads = 1);

/// How many deduplicated pool subsets are bins of some optimal partition.
int ideal_subset_coverage(const SubsetPool& pool, const OracleReport& report);

struct RunRecord {
  std::string instance;
  int run = 0;
  int best_b = 0;  // 0 when the heuristic completed no solution
  int b_opt = 0;
  bool reached_optimum = false;
  int num_optima_found = 0;
  int ideal_coverage = 0;
  int ideal_size = 0;
  int pool_size = 0;  // deduplicated sampled pool
  double seconds_anneal = 0.0;
  double seconds_heuristic = 0.0;
};

struct InstanceSummary {
  std::string instance;
  int runs = 0;
  int optimal_runs = 0;
  double mean_best_b = 0.0;
  std::optional<double> mean_optima_when_optimal;
  std::optional<double> mean_coverage_when_optimal;
  std::optional<double> mean_coverage_when_not_optimal;
  int b_opt = 0;
  int num_optima = 0;
  int ideal_size = 0;
};

struct BenchmarkResults {
  std::vector<RunRecord> records;
  std::vector<InstanceSummary> summaries;
  std::vector<std::string> failures;  // instances that errored and were skipped
};

/// Runs the whole benchmark: one oracle report per instance (cached by
/// instance content), runs_per_instance seeded H-BPP runs each, then writes
/// results.csv, summary.md and the per-run artifacts under output_dir.
/// Per-instance failures are recorded and skipped.
BenchmarkResults run_benchmark(const BenchmarkConfig& config);

/// Entry point behind the `hbpp` binary; returns the process exit code.
int cli_main(int argc, char** argv);

}  // namespace hbpp
