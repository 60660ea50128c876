#include "hbpp/instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "hbpp/rng.hpp"

namespace hbpp {

std::string distribution_name(Distribution dist) {
  switch (dist) {
    case Distribution::SingleGaussian: return "gauss1";
    case Distribution::DoubleGaussian: return "gauss2";
    case Distribution::Uniform: return "uniform";
  }
  throw std::invalid_argument("distribution_name: unknown distribution");
}

std::string distribution_tag(Distribution dist) {
  switch (dist) {
    case Distribution::SingleGaussian: return "1G";
    case Distribution::DoubleGaussian: return "2G";
    case Distribution::Uniform: return "U";
  }
  throw std::invalid_argument("distribution_tag: unknown distribution");
}

Distribution parse_distribution(std::string_view text) {
  if (text == "gauss1" || text == "1G") return Distribution::SingleGaussian;
  if (text == "gauss2" || text == "2G") return Distribution::DoubleGaussian;
  if (text == "uniform" || text == "U") return Distribution::Uniform;
  throw std::invalid_argument("unknown distribution \"" + std::string(text) +
                              "\" (expected gauss1, gauss2 or uniform)");
}

int Instance::min_weight() const {
  if (weights.empty()) throw std::runtime_error("instance has no weights");
  return *std::min_element(weights.begin(), weights.end());
}

long long Instance::total_weight() const {
  long long total = 0;
  for (int w : weights) total += w;
  return total;
}

void Instance::validate() const {
  if (num_items < 1) throw std::runtime_error("instance invariant violated: num_items >= 1");
  if (capacity < 1) throw std::runtime_error("instance invariant violated: capacity >= 1");
  if (static_cast<int>(weights.size()) != num_items) {
    std::ostringstream msg;
    msg << "instance invariant violated: weights has " << weights.size()
        << " entries but num_items=" << num_items;
    throw std::runtime_error(msg.str());
  }
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 1 || weights[i] > capacity) {
      std::ostringstream msg;
      msg << "instance invariant violated: weight w_" << (i + 1) << "=" << weights[i]
          << " outside [1, " << capacity << "]";
      throw std::runtime_error(msg.str());
    }
  }
}

namespace {

// Rounds a real sample to the nearest integer and accepts it only inside
// [1, capacity]; out-of-range samples are redrawn so the distribution shape
// is preserved instead of piling up at the bounds.
int draw_weight(Rng& rng, int capacity, Distribution dist) {
  const double c = static_cast<double>(capacity);
  for (;;) {
    double sample = 0.0;
    switch (dist) {
      case Distribution::Uniform:
        return static_cast<int>(1 + uniform_index(rng, static_cast<std::uint64_t>(capacity)));
      case Distribution::SingleGaussian:
        sample = normal_sample(rng, c / 2.0, c / 6.0);
        break;
      case Distribution::DoubleGaussian: {
        const double mean = uniform_double(rng) < 0.5 ? c / 3.0 : 2.0 * c / 3.0;
        sample = normal_sample(rng, mean, c / 9.0);
        break;
      }
    }
    const long long rounded = std::llround(sample);
    if (rounded >= 1 && rounded <= capacity) return static_cast<int>(rounded);
  }
}

}  // namespace

Instance generate_instance(int n, int capacity, Distribution dist, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("generate_instance: n must be >= 1");
  if (capacity < 1) throw std::invalid_argument("generate_instance: capacity must be >= 1");

  Rng rng(seed);
  Instance instance;
  instance.num_items = n;
  instance.capacity = capacity;
  instance.distribution = dist;
  instance.seed = seed;
  instance.weights.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) instance.weights.push_back(draw_weight(rng, capacity, dist));

  std::ostringstream name;
  name << n << "_" << capacity << "_" << distribution_tag(dist) << "_s" << seed;
  instance.name = name.str();
  instance.validate();
  return instance;
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("cannot parse instance file " + path.string() + ": " + e.what());
  }

  Instance instance;
  try {
    instance.name = doc.at("name").get<std::string>();
    instance.num_items = doc.at("num_items").get<int>();
    instance.capacity = doc.at("capacity").get<int>();
    instance.weights = doc.at("weights").get<std::vector<int>>();
    instance.distribution = parse_distribution(doc.at("distribution").get<std::string>());
    instance.seed = doc.at("seed").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("instance file " + path.string() + " has a bad schema: " + e.what());
  }
  instance.validate();
  return instance;
}

void save_instance(const Instance& instance, const std::filesystem::path& path) {
  instance.validate();
  nlohmann::json doc{{"name", instance.name},
                     {"num_items", instance.num_items},
                     {"capacity", instance.capacity},
                     {"weights", instance.weights},
                     {"distribution", distribution_name(instance.distribution)},
                     {"seed", instance.seed}};
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write instance file: " + path.string());
  out << doc.dump(2) << "\n";
}

}  // namespace hbpp
