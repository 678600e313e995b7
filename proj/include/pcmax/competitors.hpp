#pragma once

#include <vector>

#include "pcmax/model.hpp"

namespace pcmax {

struct FfdPacking {
  bool fits = false;  ///< bins used <= m
  Time capacity = 0;
  std::vector<std::vector<JobIndex>> bins;
};

/// First-fit decreasing into bins of the given capacity. Throws
/// std::invalid_argument if capacity < p_max.
FfdPacking ffd_pack(const Instance& instance, Time capacity);

inline constexpr int kDefaultMultifitIterations = 7;

/// MULTIFIT: integer binary search over the capacity interval
/// [max(ceil(sum/m), p_max), max(ceil(2 sum/m), p_max)] with FFD as the
/// feasibility oracle; returns the packing of the smallest feasible capacity
/// seen. Bin i becomes machine i; unused machines stay empty.
Schedule multifit(const Instance& instance, int iterations = kDefaultMultifitIterations);

/// COMBINE: LPT, then MULTIFIT with its upper capacity tightened to the LPT
/// makespan. Returns whichever is better (LPT on ties).
Schedule combine(const Instance& instance, int iterations = kDefaultMultifitIterations);

}  // namespace pcmax
