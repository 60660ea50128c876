#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "hbpp/bench.hpp"

namespace hbpp {

namespace {

int cmd_generate(int n, int capacity, const std::string& dist, std::uint64_t seed,
                 const std::string& out, const std::string& name) {
  Instance instance = generate_instance(n, capacity, parse_distribution(dist), seed);
  if (!name.empty()) instance.name = name;
  save_instance(instance, out);
  std::cout << "wrote " << out << " (" << instance.name << ", min weight "
            << instance.min_weight() << ", max weight "
            << *std::max_element(instance.weights.begin(), instance.weights.end()) << ")\n";
  return 0;
}

struct SampleArgs {
  std::string instance_path;
  std::string pool_out;
  std::string diag_out;
  int shots = 1000;
  double beta_scale = 0.2;
  double tau = kDefaultTau;
  int steps = 500;
  double h0 = 10.0;
  std::uint64_t seed = 0;
  bool no_singletons = false;
  int threads = 1;
};

int cmd_sample(const SampleArgs& args) {
  const Instance instance = load_instance(args.instance_path);
  AnnealParams params;
  params.shots_per_k = args.shots;
  params.beta = args.beta_scale * static_cast<double>(instance.min_weight());
  params.tau = args.tau;
  params.n_steps = args.steps;
  params.h0 = args.h0;

  SampleResult result = sample_subsets(instance, params, args.seed, args.threads);
  if (!args.no_singletons) augment_with_singletons(result.pool, instance);
  save_pool(result.pool, args.pool_out);
  if (!args.diag_out.empty()) save_diagnostics_csv(result.per_k, args.diag_out);

  long long feasible = 0, shots = 0;
  for (const KDiagnostics& d : result.per_k) {
    feasible += std::llround(d.feasible_fraction * d.shots);
    shots += d.shots;
  }
  std::printf("sampled %lld shots over %zu schedule entries: %zu distinct feasible subsets "
              "(feasible fraction %.3f)\n",
              shots, result.per_k.size(), result.pool.size(),
              shots > 0 ? static_cast<double>(feasible) / static_cast<double>(shots) : 0.0);
  std::cout << "wrote " << args.pool_out << "\n";
  return 0;
}

int cmd_solve(const std::string& instance_path, const std::string& pool_path, long max_iter,
              std::uint64_t seed, const std::string& out, bool weight_by_multiplicity) {
  const Instance instance = load_instance(instance_path);
  const SubsetPool pool = load_pool(pool_path, instance.num_items);
  SolveOptions options;
  options.weight_by_multiplicity = weight_by_multiplicity;
  const HeuristicResult result = solve(pool, instance.num_items, max_iter, seed, options);
  if (!result.found()) {
    std::cerr << "no complete solution: the pool (" << pool.size()
              << " subsets) cannot cover all " << instance.num_items << " items\n";
    return 1;
  }
  std::cout << "best_b=" << result.best_b << " distinct_best=" << result.distinct_best.size()
            << " complete_passes=" << result.iterations_with_complete_solution << "/"
            << result.iterations_run << "\n";
  if (!out.empty()) {
    save_solution(result.distinct_best.front(), out);
    std::cout << "wrote " << out << "\n";
  }
  return 0;
}

int cmd_oracle(const std::string& instance_path, bool store_optima, const std::string& out) {
  const Instance instance = load_instance(instance_path);
  const OracleReport report = brute_force_optimum(instance);
  std::cout << "b_opt=" << report.b_opt << " optima=" << report.num_optima()
            << " ideal=" << report.ideal_subset_size() << "\n";
  if (!out.empty()) {
    save_report(report, out, store_optima);
    std::cout << "wrote " << out << "\n";
  }
  return 0;
}

int cmd_bench(const std::string& config_path, int threads_override, bool no_timings) {
  BenchmarkConfig config = load_config(config_path);
  if (threads_override > 0) config.num_threads = threads_override;
  if (no_timings) config.record_timings = false;
  const BenchmarkResults results = run_benchmark(config);

  int optimal = 0, counted = 0;
  for (const RunRecord& r : results.records) {
    ++counted;
    if (r.reached_optimum) ++optimal;
  }
  std::printf("%d/%d runs reached the oracle optimum across %zu instances\n", optimal, counted,
              results.summaries.size());
  std::cout << "wrote " << (config.output_dir / "results.csv").string() << " and "
            << (config.output_dir / "summary.md").string() << "\n";
  return results.failures.empty() ? 0 : 1;
}

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{"H-BPP: annealing-sampled subset pool + greedy heuristic for 1d bin packing"};
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "Generate a random instance file");
  int gen_n = 0, gen_capacity = 0;
  std::string gen_dist, gen_out, gen_name;
  std::uint64_t gen_seed = 0;
  generate->add_option("--n", gen_n, "Number of items")->required();
  generate->add_option("--capacity", gen_capacity, "Bin capacity")->required();
  generate->add_option("--dist", gen_dist, "Weight distribution: gauss1, gauss2 or uniform")
      ->required();
  generate->add_option("--seed", gen_seed, "Generator seed")->capture_default_str();
  generate->add_option("--out", gen_out, "Output instance file")->required();
  generate->add_option("--name", gen_name, "Override the derived instance name");

  // sample
  auto* sample = app.add_subcommand("sample", "Sample feasible subsets by simulated annealing");
  SampleArgs sample_args;
  sample->add_option("--instance", sample_args.instance_path, "Instance file")->required();
  sample->add_option("--shots", sample_args.shots, "Shots per schedule entry")->capture_default_str();
  sample->add_option("--beta-scale", sample_args.beta_scale,
                     "beta = scale * min weight")->capture_default_str();
  sample->add_option("--tau", sample_args.tau, "Total evolution time")->capture_default_str();
  sample->add_option("--steps", sample_args.steps, "Number of evolution steps")->capture_default_str();
  sample->add_option("--h0", sample_args.h0, "Transverse field strength")->capture_default_str();
  sample->add_option("--seed", sample_args.seed, "Sampling seed")->capture_default_str();
  sample->add_option("--pool-out", sample_args.pool_out, "Output pool file")->required();
  sample->add_option("--diag-out", sample_args.diag_out, "Optional per-k diagnostics CSV");
  sample->add_flag("--no-singletons", sample_args.no_singletons,
                   "Do not inject missing singleton subsets into the pool");
  sample->add_option("--threads", sample_args.threads, "Worker threads")->capture_default_str();

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Combine a subset pool into full solutions");
  std::string solve_instance, solve_pool, solve_out;
  long solve_max_iter = 10000;
  std::uint64_t solve_seed = 0;
  bool solve_weighted = false;
  solve_cmd->add_option("--instance", solve_instance, "Instance file")->required();
  solve_cmd->add_option("--pool", solve_pool, "Subset pool file")->required();
  solve_cmd->add_option("--max-iter", solve_max_iter, "Greedy restarts")->capture_default_str();
  solve_cmd->add_option("--seed", solve_seed, "Shuffle seed")->capture_default_str();
  solve_cmd->add_option("--out", solve_out, "Write the best solution found");
  solve_cmd->add_flag("--weight-by-multiplicity", solve_weighted,
                      "Shuffle each subset once per sampled multiplicity");

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact brute-force optimum and census");
  std::string oracle_instance, oracle_out;
  bool oracle_store = false;
  oracle_cmd->add_option("--instance", oracle_instance, "Instance file")->required();
  oracle_cmd->add_flag("--store-optima", oracle_store,
                       "Include the full optima census in the report file");
  oracle_cmd->add_option("--out", oracle_out, "Write the oracle report");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark config end to end");
  std::string bench_config;
  int bench_threads = 0;
  bool bench_no_timings = false;
  bench_cmd->add_option("--config", bench_config, "Benchmark config JSON")->required();
  bench_cmd->add_option("--threads", bench_threads, "Override the config thread count");
  bench_cmd->add_flag("--no-timings", bench_no_timings,
                      "Zero the timing columns for byte-reproducible output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*generate) return cmd_generate(gen_n, gen_capacity, gen_dist, gen_seed, gen_out, gen_name);
    if (*sample) return cmd_sample(sample_args);
    if (*solve_cmd) {
      return cmd_solve(solve_instance, solve_pool, solve_max_iter, solve_seed, solve_out,
                       solve_weighted);
    }
    if (*oracle_cmd) return cmd_oracle(oracle_instance, oracle_store, oracle_out);
    if (*bench_cmd) return cmd_bench(bench_config, bench_threads, bench_no_timings);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace hbpp
