#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace hbpp {

/// Weight distributions supported by the instance generator.
enum class Distribution { SingleGaussian, DoubleGaussian, Uniform };

/// Wire name used in instance files: "gauss1" | "gauss2" | "uniform".
std::string distribution_name(Distribution dist);
/// Short tag used in generated instance names: "1G" | "2G" | "U".
std::string distribution_tag(Distribution dist);
/// Parses either the wire name or the short tag. Throws std::invalid_argument.
Distribution parse_distribution(std::string_view text);

/// A 1d bin packing instance: n items with integer weights and a shared bin
/// capacity, plus the provenance of its generation.
struct Instance {
  std::string name;
  int num_items = 0;
  int capacity = 0;
  std::vector<int> weights;
  Distribution distribution = Distribution::Uniform;
  std::uint64_t seed = 0;

  int min_weight() const;
  long long total_weight() const;

  /// Throws std::runtime_error naming the violated invariant:
  /// weights.size() == num_items, 1 <= w_i <= capacity, num_items >= 1,
  /// capacity >= 1.
  void validate() const;
};

/// Draws n integer weights from the requested distribution, redrawing any
/// sample that rounds outside [1, capacity]. Deterministic for fixed
/// arguments. Throws std::invalid_argument for n == 0 or capacity == 0.
///
/// Distribution parameters: SingleGaussian is N(C/2, C/6); DoubleGaussian is
/// an equal mixture of N(C/3, C/9) and N(2C/3, C/9); Uniform draws integers
/// from {1, ..., C}.
Instance generate_instance(int n, int capacity, Distribution dist,
                           std::uint64_t seed);

/// JSON file round trip. load_instance validates the parsed instance and
/// throws std::runtime_error on I/O or schema violations.
Instance load_instance(const std::filesystem::path& path);
void save_instance(const Instance& instance, const std::filesystem::path& path);

}  // namespace hbpp
