#include "pcmax/competitors.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "pcmax/heuristics.hpp"

namespace pcmax {
namespace {

Time ceil_div(Time a, Time b) { return (a + b - 1) / b; }

Schedule to_schedule(const Instance& instance, const FfdPacking& packing) {
  Assignment assignment(static_cast<std::size_t>(instance.machines()));
  for (std::size_t b = 0; b < packing.bins.size(); ++b) assignment[b] = packing.bins[b];
  return evaluate(instance, std::move(assignment));
}

// Binary search over [lower, upper]; nullopt if no probed capacity fits.
std::optional<FfdPacking> search(const Instance& instance, Time lower, Time upper,
                                 int iterations) {
  std::optional<FfdPacking> best;
  FfdPacking at_upper = ffd_pack(instance, upper);
  if (at_upper.fits) best = std::move(at_upper);
  for (int it = 0; it < iterations && lower < upper; ++it) {
    const Time mid = lower + (upper - lower) / 2;
    FfdPacking p = ffd_pack(instance, mid);
    if (p.fits) {
      upper = mid;
      best = std::move(p);
    } else {
      lower = mid + 1;
    }
  }
  return best;
}

}  // namespace

FfdPacking ffd_pack(const Instance& instance, Time capacity) {
  if (capacity < instance.max_time()) {
    throw std::invalid_argument("capacity below the largest processing time");
  }
  FfdPacking packing;
  packing.capacity = capacity;
  std::vector<Time> room;
  for (JobIndex j = 0; j < instance.size(); ++j) {
    const Time t = instance.time(j);
    auto it = std::find_if(room.begin(), room.end(), [&](Time r) { return r >= t; });
    if (it == room.end()) {
      room.push_back(capacity - t);
      packing.bins.push_back({j});
    } else {
      *it -= t;
      packing.bins[static_cast<std::size_t>(it - room.begin())].push_back(j);
    }
  }
  packing.fits = packing.bins.size() <= static_cast<std::size_t>(instance.machines());
  return packing;
}

Schedule multifit(const Instance& instance, int iterations) {
  if (iterations < 0) throw std::invalid_argument("negative iteration count");
  const Time m = instance.machines();
  const Time lower = std::max(ceil_div(instance.total(), m), instance.max_time());
  const Time upper = std::max(ceil_div(2 * instance.total(), m), instance.max_time());
  if (auto best = search(instance, lower, upper, iterations)) {
    return to_schedule(instance, *best);
  }
  // FFD always fits at the upper end of the interval, so this is unreachable
  // in exact arithmetic; keep a valid answer regardless.
  return lpt(instance);
}

Schedule combine(const Instance& instance, int iterations) {
  if (iterations < 0) throw std::invalid_argument("negative iteration count");
  Schedule base = lpt(instance);
  const Time m = instance.machines();
  const Time lower = std::max(ceil_div(instance.total(), m), instance.max_time());
  if (base.makespan() <= lower) return base;
  auto best = search(instance, lower, base.makespan(), iterations);
  if (best) {
    Schedule packed = to_schedule(instance, *best);
    if (packed.makespan() < base.makespan()) return packed;
  }
  return base;
}

}  // namespace pcmax
