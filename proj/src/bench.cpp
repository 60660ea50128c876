#include "hbpp/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "hbpp/rng.hpp"

namespace hbpp {

namespace {

double elapsed_seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string format_fixed(double value, int decimals) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, value);
  return buffer;
}

void require_keys(const nlohmann::json& object, std::initializer_list<const char*> allowed,
                  const std::string& where) {
  for (const auto& [key, value] : object.items()) {
    if (std::find_if(allowed.begin(), allowed.end(),
                     [&](const char* k) { return key == k; }) == allowed.end()) {
      throw std::runtime_error("unknown key \"" + key + "\" in " + where);
    }
  }
}

}  // namespace

BenchmarkConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("cannot parse config file " + path.string() + ": " + e.what());
  }

  BenchmarkConfig config;
  try {
    require_keys(doc,
                 {"instances", "runs_per_instance", "anneal", "max_iter", "master_seed",
                  "output_dir", "include_singletons", "store_artifacts", "record_timings",
                  "num_threads"},
                 "config");
    for (const auto& entry : doc.at("instances")) {
      InstanceSpec spec;
      require_keys(entry, {"path", "generate"}, "instance spec");
      if (entry.contains("path")) {
        spec.path = std::filesystem::path(entry.at("path").get<std::string>());
      } else if (entry.contains("generate")) {
        const auto& gen = entry.at("generate");
        require_keys(gen, {"n", "capacity", "distribution", "seed"}, "generate spec");
        InstanceSpec::Generate generate;
        generate.n = gen.at("n").get<int>();
        generate.capacity = gen.at("capacity").get<int>();
        generate.distribution = parse_distribution(gen.at("distribution").get<std::string>());
        generate.seed = gen.at("seed").get<std::uint64_t>();
        spec.generate = generate;
      } else {
        throw std::runtime_error("instance spec needs either \"path\" or \"generate\"");
      }
      config.instances.push_back(std::move(spec));
    }
    if (doc.contains("runs_per_instance"))
      config.runs_per_instance = doc.at("runs_per_instance").get<int>();
    if (doc.contains("anneal")) {
      const auto& anneal = doc.at("anneal");
      require_keys(anneal, {"shots_per_k", "beta_scale", "tau", "n_steps", "h0"}, "anneal block");
      if (anneal.contains("shots_per_k")) config.shots_per_k = anneal.at("shots_per_k").get<int>();
      if (anneal.contains("beta_scale")) config.beta_scale = anneal.at("beta_scale").get<double>();
      if (anneal.contains("tau")) config.tau = anneal.at("tau").get<double>();
      if (anneal.contains("n_steps")) config.n_steps = anneal.at("n_steps").get<int>();
      if (anneal.contains("h0")) config.h0 = anneal.at("h0").get<double>();
    }
    if (doc.contains("max_iter")) config.max_iter = doc.at("max_iter").get<long>();
    if (doc.contains("master_seed")) config.master_seed = doc.at("master_seed").get<std::uint64_t>();
    if (doc.contains("output_dir"))
      config.output_dir = std::filesystem::path(doc.at("output_dir").get<std::string>());
    if (doc.contains("include_singletons"))
      config.include_singletons = doc.at("include_singletons").get<bool>();
    if (doc.contains("store_artifacts"))
      config.store_artifacts = doc.at("store_artifacts").get<bool>();
    if (doc.contains("record_timings"))
      config.record_timings = doc.at("record_timings").get<bool>();
    if (doc.contains("num_threads")) config.num_threads = doc.at("num_threads").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("config file " + path.string() + " has a bad schema: " + e.what());
  }
  if (config.instances.empty()) throw std::runtime_error("config lists no instances");
  if (config.runs_per_instance < 1) throw std::runtime_error("runs_per_instance must be >= 1");
  return config;
}

RunOutput run_hbpp(const Instance& instance, const AnnealParams& params, long max_iter,
                   std::uint64_t seed, bool include_singletons, int num_threads) {
  RunOutput output;

  auto t0 = std::chrono::steady_clock::now();
  SampleResult sampled = sample_subsets(instance, params, mix_seed(seed, 1), num_threads);
  output.seconds_anneal = elapsed_seconds(t0);
  output.diagnostics = std::move(sampled.per_k);
  output.sampled_pool = std::move(sampled.pool);

  output.solver_pool = output.sampled_pool;
  if (include_singletons) augment_with_singletons(output.solver_pool, instance);

  auto t1 = std::chrono::steady_clock::now();
  output.result = solve(output.solver_pool, instance.num_items, max_iter, mix_seed(seed, 2));
  output.seconds_heuristic = elapsed_seconds(t1);
  return output;
}

int ideal_subset_coverage(const SubsetPool& pool, const OracleReport& report) {
  int covered = 0;
  for (const auto& [mask, info] : pool.entries) {
    if (std::binary_search(report.ideal_subset.begin(), report.ideal_subset.end(), mask)) {
      ++covered;
    }
  }
  return covered;
}

namespace {

std::uint64_t instance_content_hash(const Instance& instance) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a over (capacity, weights)
  auto mix = [&h](std::uint64_t v) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (v >> (8 * byte)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  mix(static_cast<std::uint64_t>(instance.capacity));
  for (int w : instance.weights) mix(static_cast<std::uint64_t>(w));
  return h;
}

void write_results_csv(const std::filesystem::path& path, const std::vector<RunRecord>& records,
                       bool record_timings) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write results file: " + path.string());
  out << "instance,run,best_b,b_opt,reached_optimum,num_optima_found,ideal_coverage,"
         "ideal_size,pool_size,seconds_anneal,seconds_heuristic\n";
  for (const RunRecord& r : records) {
    out << r.instance << ',' << r.run << ',' << r.best_b << ',' << r.b_opt << ','
        << (r.reached_optimum ? 1 : 0) << ',' << r.num_optima_found << ',' << r.ideal_coverage
        << ',' << r.ideal_size << ',' << r.pool_size << ','
        << format_fixed(record_timings ? r.seconds_anneal : 0.0, 3) << ','
        << format_fixed(record_timings ? r.seconds_heuristic : 0.0, 3) << '\n';
  }
}

void write_summary_md(const std::filesystem::path& path,
                      const std::vector<InstanceSummary>& summaries,
                      const std::vector<std::string>& failures) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write summary file: " + path.string());
  out << "# H-BPP benchmark summary\n\n";
  out << "| Instance | b&#773; | avg #optima | avg ideal coverage | Opt. | #optima | ideal size |\n";
  out << "|---|---|---|---|---|---|---|\n";
  auto cell = [](const std::optional<double>& value) {
    return value ? format_fixed(*value, 1) : std::string("—");
  };
  for (const InstanceSummary& s : summaries) {
    out << "| " << s.instance << " | "
        << (s.runs > 0 ? format_fixed(s.mean_best_b, 1) : std::string("—")) << " | "
        << cell(s.mean_optima_when_optimal) << " | " << cell(s.mean_coverage_when_optimal)
        << " | " << s.b_opt << " | " << s.num_optima << " | " << s.ideal_size << " |\n";
  }
  out << "\nAverages are taken over the runs that reached the optimum; — marks instances "
         "with no such runs.\n";

  std::vector<const InstanceSummary*> missed;
  for (const InstanceSummary& s : summaries) {
    if (s.mean_coverage_when_not_optimal) missed.push_back(&s);
  }
  out << "\n## Runs that missed the optimum\n\n";
  if (missed.empty()) {
    out << "Every run reached the optimal bin count.\n";
  } else {
    out << "| Instance | avg ideal coverage |\n";
    out << "|---|---|\n";
    for (const InstanceSummary* s : missed) {
      out << "| " << s->instance << " | " << format_fixed(*s->mean_coverage_when_not_optimal, 1)
          << " (of " << s->ideal_size << ") |\n";
    }
  }
  if (!failures.empty()) {
    out << "\n## Skipped instances\n\n";
    for (const std::string& f : failures) out << "- " << f << "\n";
  }
}

}  // namespace

BenchmarkResults run_benchmark(const BenchmarkConfig& config) {
  namespace fs = std::filesystem;
  fs::create_directories(config.output_dir);
  if (config.store_artifacts) {
    fs::create_directories(config.output_dir / "pools");
    fs::create_directories(config.output_dir / "solutions");
  }

  BenchmarkResults results;

  struct Prepared {
    Instance instance;
    OracleReport oracle;
  };
  std::vector<Prepared> prepared;
  std::map<std::uint64_t, OracleReport> oracle_cache;
  for (std::size_t i = 0; i < config.instances.size(); ++i) {
    const InstanceSpec& spec = config.instances[i];
    try {
      Prepared p;
      if (spec.path) {
        p.instance = load_instance(*spec.path);
      } else if (spec.generate) {
        p.instance = generate_instance(spec.generate->n, spec.generate->capacity,
                                       spec.generate->distribution, spec.generate->seed);
      } else {
        throw std::runtime_error("instance spec has neither path nor generator");
      }
      const std::uint64_t key = instance_content_hash(p.instance);
      auto cached = oracle_cache.find(key);
      if (cached == oracle_cache.end()) {
        cached = oracle_cache.emplace(key, brute_force_optimum(p.instance)).first;
      }
      p.oracle = cached->second;
      prepared.push_back(std::move(p));
    } catch (const std::exception& e) {
      std::ostringstream msg;
      msg << "instance " << (spec.path ? spec.path->string() : "generated #" + std::to_string(i))
          << ": " << e.what();
      results.failures.push_back(msg.str());
      std::cerr << "bench: skipping " << msg.str() << "\n";
    }
  }

  const int runs = config.runs_per_instance;
  std::vector<RunRecord> records(prepared.size() * static_cast<std::size_t>(runs));

  auto execute_run = [&](std::size_t instance_idx, int run_idx) {
    const Prepared& p = prepared[instance_idx];
    AnnealParams params;
    params.shots_per_k = config.shots_per_k;
    params.beta = config.beta_scale * static_cast<double>(p.instance.min_weight());
    params.tau = config.tau;
    params.n_steps = config.n_steps;
    params.h0 = config.h0;

    const std::uint64_t run_seed =
        mix_seed(mix_seed(config.master_seed, static_cast<std::uint64_t>(instance_idx)),
                 static_cast<std::uint64_t>(run_idx));
    const RunOutput output =
        run_hbpp(p.instance, params, config.max_iter, run_seed, config.include_singletons, 1);

    RunRecord record;
    record.instance = p.instance.name;
    record.run = run_idx + 1;
    record.best_b = output.result.found() ? output.result.best_b : 0;
    record.b_opt = p.oracle.b_opt;
    record.reached_optimum = output.result.found() && output.result.best_b == p.oracle.b_opt;
    record.num_optima_found =
        record.reached_optimum ? static_cast<int>(output.result.distinct_best.size()) : 0;
    record.ideal_coverage = ideal_subset_coverage(output.sampled_pool, p.oracle);
    record.ideal_size = static_cast<int>(p.oracle.ideal_subset_size());
    record.pool_size = static_cast<int>(output.sampled_pool.size());
    record.seconds_anneal = output.seconds_anneal;
    record.seconds_heuristic = output.seconds_heuristic;
    records[instance_idx * static_cast<std::size_t>(runs) + static_cast<std::size_t>(run_idx)] =
        record;

    if (config.store_artifacts) {
      const std::string stem = p.instance.name + "_run" + std::to_string(run_idx + 1);
      save_pool(output.sampled_pool, config.output_dir / "pools" / (stem + ".json"));
      if (output.result.found()) {
        save_solution(output.result.distinct_best.front(),
                      config.output_dir / "solutions" / (stem + ".json"));
      }
    }
  };

  std::vector<std::pair<std::size_t, int>> tasks;
  for (std::size_t i = 0; i < prepared.size(); ++i) {
    for (int r = 0; r < runs; ++r) tasks.emplace_back(i, r);
  }
  if (config.num_threads > 1 && tasks.size() > 1) {
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> workers;
    const int count = std::min<int>(config.num_threads, static_cast<int>(tasks.size()));
    for (int t = 0; t < count; ++t) {
      workers.push_back(std::async(std::launch::async, [&]() {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= tasks.size()) return;
          execute_run(tasks[i].first, tasks[i].second);
        }
      }));
    }
    for (auto& w : workers) w.get();
  } else {
    for (const auto& [i, r] : tasks) execute_run(i, r);
  }
  results.records = std::move(records);

  for (std::size_t i = 0; i < prepared.size(); ++i) {
    const Prepared& p = prepared[i];
    InstanceSummary summary;
    summary.instance = p.instance.name;
    summary.b_opt = p.oracle.b_opt;
    summary.num_optima = static_cast<int>(p.oracle.num_optima());
    summary.ideal_size = static_cast<int>(p.oracle.ideal_subset_size());

    double sum_b = 0.0;
    double sum_optima = 0.0, sum_cov_opt = 0.0, sum_cov_miss = 0.0;
    int found_runs = 0, optimal = 0, missed = 0;
    for (int r = 0; r < runs; ++r) {
      const RunRecord& record = results.records[i * static_cast<std::size_t>(runs) + r];
      if (record.best_b == 0) continue;  // no complete solution; excluded from means
      ++found_runs;
      sum_b += record.best_b;
      if (record.reached_optimum) {
        ++optimal;
        sum_optima += record.num_optima_found;
        sum_cov_opt += record.ideal_coverage;
      } else {
        ++missed;
        sum_cov_miss += record.ideal_coverage;
      }
    }
    summary.runs = found_runs;
    summary.optimal_runs = optimal;
    if (found_runs > 0) summary.mean_best_b = sum_b / found_runs;
    if (optimal > 0) {
      summary.mean_optima_when_optimal = sum_optima / optimal;
      summary.mean_coverage_when_optimal = sum_cov_opt / optimal;
    }
    if (missed > 0) summary.mean_coverage_when_not_optimal = sum_cov_miss / missed;
    results.summaries.push_back(std::move(summary));
  }

  write_results_csv(config.output_dir / "results.csv", results.records, config.record_timings);
  write_summary_md(config.output_dir / "summary.md", results.summaries, results.failures);
  return results;
}

}  // namespace hbpp
