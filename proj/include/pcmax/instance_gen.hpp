#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "pcmax/model.hpp"

namespace pcmax {

enum class InstanceClass { uniform, nonuniform, graham_family, lptrev_family };

std::string to_string(InstanceClass cls);
/// Throws std::invalid_argument for unknown names.
InstanceClass parse_instance_class(std::string_view name);

/// Generator identifier written into manifests: 64-bit Mersenne Twister
/// seeded per instance via splitmix64, integers by rejection sampling.
inline constexpr std::string_view kPrngId = "mt19937_64/splitmix64/rejection";

struct GenSpec {
  InstanceClass cls = InstanceClass::uniform;
  Time a = 1;
  Time b = 100;
  int m = 1;
  int n = 1;
  std::uint64_t seed = 0;
  int count = 1;
};

/// Uniform integer on [lo, hi] by rejection sampling; identical on every
/// standard library.
Time uniform_int(std::mt19937_64& rng, Time lo, Time hi);

/// Seed used for the i-th instance of a spec; instances never share stream
/// state, so any subset can be regenerated on its own.
std::uint64_t instance_seed(std::uint64_t seed, std::size_t index);

/// Uniform integers on [a, b]. Requires 1 <= a <= b, m >= 1, n >= 1, count >= 0.
std::vector<Instance> gen_uniform(const GenSpec& spec);

/// round(0.98 n) (half up) times uniform on [ceil(0.9(b-a)), b], the rest on
/// [a, floor(0.2(b-a))]. Throws std::invalid_argument when either sub-range
/// is empty.
std::vector<Instance> gen_nonuniform(const GenSpec& spec);

/// Two jobs each of 2m-1, ..., m+1 and three of m (n = 2m+1).
Instance gen_graham_family(int m);

/// p_j = 2m - floor((j+1)/2) for j <= 2m-2, p_j = m for 2m-1 <= j <= 2m+2.
/// Requires m >= 3.
Instance gen_lptrev_family(int m);

/// Dispatches on spec.cls; the family classes ignore a, b, n and count and
/// yield one instance.
std::vector<Instance> generate(const GenSpec& spec);

/// Bounds of the two non-uniform sub-ranges.
struct NonuniformRanges {
  Time high_lo, high_hi, low_lo, low_hi;
  int high_count;
};
NonuniformRanges nonuniform_ranges(Time a, Time b, int n);

}  // namespace pcmax
