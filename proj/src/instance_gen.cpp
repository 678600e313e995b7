#include "pcmax/instance_gen.hpp"

#include <limits>
#include <random>
#include <stdexcept>

namespace pcmax {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

void check_common(const GenSpec& spec) {
  if (spec.m < 1) throw std::invalid_argument("generator needs m >= 1");
  if (spec.n < 1) throw std::invalid_argument("generator needs n >= 1");
  if (spec.count < 0) throw std::invalid_argument("negative instance count");
  if (spec.a < 1 || spec.a > spec.b) {
    throw std::invalid_argument("invalid range [" + std::to_string(spec.a) + ", " +
                                std::to_string(spec.b) + "]");
  }
}

}  // namespace

// std::uniform_int_distribution is implementation-defined, so draws are made
// by hand to keep suites identical across standard libraries.
Time uniform_int(std::mt19937_64& rng, Time lo, Time hi) {
  if (hi < lo) throw std::invalid_argument("empty integer range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<Time>(x % span);
}

std::string to_string(InstanceClass cls) {
  switch (cls) {
    case InstanceClass::uniform: return "uniform";
    case InstanceClass::nonuniform: return "nonuniform";
    case InstanceClass::graham_family: return "graham_family";
    case InstanceClass::lptrev_family: return "lptrev_family";
  }
  return "?";
}

InstanceClass parse_instance_class(std::string_view name) {
  for (auto cls : {InstanceClass::uniform, InstanceClass::nonuniform, InstanceClass::graham_family,
                   InstanceClass::lptrev_family}) {
    if (to_string(cls) == name) return cls;
  }
  throw std::invalid_argument("unknown instance class '" + std::string(name) + "'");
}

std::uint64_t instance_seed(std::uint64_t seed, std::size_t index) {
  return splitmix64(splitmix64(seed) ^ static_cast<std::uint64_t>(index));
}

std::vector<Instance> gen_uniform(const GenSpec& spec) {
  check_common(spec);
  std::vector<Instance> out;
  for (int i = 0; i < spec.count; ++i) {
    std::mt19937_64 rng(instance_seed(spec.seed, static_cast<std::size_t>(i)));
    std::vector<Time> times(static_cast<std::size_t>(spec.n));
    for (auto& t : times) t = uniform_int(rng, spec.a, spec.b);
    out.emplace_back(spec.m, std::move(times));
  }
  return out;
}

NonuniformRanges nonuniform_ranges(Time a, Time b, int n) {
  const Time width = b - a;
  NonuniformRanges r{};
  r.high_lo = (9 * width + 9) / 10;  // ceil(0.9 (b-a))
  r.high_hi = b;
  r.low_lo = a;
  r.low_hi = width / 5;  // floor(0.2 (b-a))
  r.high_count = static_cast<int>((98 * static_cast<std::int64_t>(n) + 50) / 100);
  return r;
}

std::vector<Instance> gen_nonuniform(const GenSpec& spec) {
  check_common(spec);
  const NonuniformRanges r = nonuniform_ranges(spec.a, spec.b, spec.n);
  if (r.low_hi < r.low_lo || r.high_hi < r.high_lo) {
    throw std::invalid_argument("non-uniform sub-range is empty for [" + std::to_string(spec.a) +
                                ", " + std::to_string(spec.b) + "]");
  }
  std::vector<Instance> out;
  for (int i = 0; i < spec.count; ++i) {
    std::mt19937_64 rng(instance_seed(spec.seed, static_cast<std::size_t>(i)));
    std::vector<Time> times;
    times.reserve(static_cast<std::size_t>(spec.n));
    for (int j = 0; j < spec.n; ++j) {
      times.push_back(j < r.high_count ? uniform_int(rng, r.high_lo, r.high_hi)
                                       : uniform_int(rng, r.low_lo, r.low_hi));
    }
    out.emplace_back(spec.m, std::move(times));
  }
  return out;
}

Instance gen_graham_family(int m) {
  if (m < 1) throw std::invalid_argument("graham family needs m >= 1");
  std::vector<Time> times;
  for (Time v = 2 * m - 1; v >= m + 1; --v) {
    times.push_back(v);
    times.push_back(v);
  }
  for (int i = 0; i < 3; ++i) times.push_back(m);
  return Instance(m, std::move(times));
}

Instance gen_lptrev_family(int m) {
  if (m < 3) throw std::invalid_argument("LPT-REV family needs m >= 3");
  std::vector<Time> times;
  for (int j = 1; j <= 2 * m + 2; ++j) {
    times.push_back(j <= 2 * m - 2 ? 2 * m - (j + 1) / 2 : m);
  }
  return Instance(m, std::move(times));
}

std::vector<Instance> generate(const GenSpec& spec) {
  switch (spec.cls) {
    case InstanceClass::uniform: return gen_uniform(spec);
    case InstanceClass::nonuniform: return gen_nonuniform(spec);
    case InstanceClass::graham_family: return {gen_graham_family(spec.m)};
    case InstanceClass::lptrev_family: return {gen_lptrev_family(spec.m)};
  }
  throw std::invalid_argument("unknown instance class");
}

}  // namespace pcmax
