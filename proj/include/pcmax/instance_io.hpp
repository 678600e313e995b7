#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pcmax/instance_gen.hpp"
#include "pcmax/model.hpp"

namespace pcmax {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Instance text format:
//   line 1: "n m"
//   line 2: n whitespace-separated non-negative integers, any order
// The writer emits the times in input order.

Instance parse_instance(std::string_view text);
std::string format_instance(const Instance& instance);
Instance load_instance(const std::filesystem::path& path);
void store_instance(const std::filesystem::path& path, const Instance& instance);

/// One manifest row. `index` is the position within the generating spec, so
/// the instance is regenerated by instance_seed(seed, index).
struct SuiteEntry {
  std::size_t instance_id = 0;
  std::string file;
  InstanceClass cls = InstanceClass::uniform;
  Time a = 0;
  Time b = 0;
  int m = 0;
  int n = 0;
  std::uint64_t seed = 0;
  std::size_t index = 0;
};

struct Suite {
  std::vector<SuiteEntry> entries;
  std::vector<Instance> instances;
};

/// Generates every spec in order; instance ids are consecutive from 0.
Suite build_suite(const std::vector<GenSpec>& specs);

/// The 780-instance benchmark layout: {uniform, nonuniform} x b in
/// {100, 1000, 10000} (a = 1) x m in {5, 10, 25} x n in {10, 50, 100, 500,
/// 1000} with m < n, ten instances each. Each spec gets its own seed derived
/// from `seed`.
std::vector<GenSpec> benchmark_suite_specs(std::uint64_t seed, int per_cell = 10);

inline constexpr std::string_view kManifestName = "manifest.csv";

/// Writes one instance file per entry plus manifest.csv into `dir`.
void write_suite(const std::filesystem::path& dir, const Suite& suite);
/// Reads manifest.csv and the instance files it lists.
Suite read_suite(const std::filesystem::path& dir);

}  // namespace pcmax
