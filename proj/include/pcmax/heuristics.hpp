#pragma once

#include <span>
#include <vector>

#include "pcmax/model.hpp"

namespace pcmax {

/// Processing order for List Scheduling: sorted-job indices.
using JobList = std::vector<JobIndex>;

/// List Scheduling: each listed job goes to a currently least-loaded machine,
/// lowest index on ties. `seed` pre-loads machines with jobs that stay in
/// place; seed plus list must cover every job exactly once.
/// Throws std::invalid_argument if a job is listed twice or is also seeded.
Schedule list_scheduling(const Instance& instance, std::span<const JobIndex> job_list,
                         const Assignment& seed = {});

Schedule lpt(const Instance& instance);

/// LPT(S): the jobs of `prefix` go to machine 0 first (in sorted order), then
/// List Scheduling of the remaining sorted jobs over all machines.
Schedule lpt_prefix(const Instance& instance, std::span<const JobIndex> prefix);

struct LptRevResult {
  Schedule schedule;  ///< attains min(z1, z2, z3); earliest on ties
  Time z1;            ///< LPT
  Time z2;            ///< LPT({j'})
  Time z3;            ///< LPT({j'-k+1, ..., j'})
};

LptRevResult lpt_rev(const Instance& instance);

/// One m-sized block of consecutive sorted jobs as used by SLACK. `members`
/// holds real jobs only; `padding` counts the zero-time dummies that fill the
/// last tuple.
struct TupleSlack {
  std::size_t tuple_index;
  std::vector<JobIndex> members;
  std::size_t padding;
  Time slack;
};

/// Tuples in construction order (before sorting by slack).
std::vector<TupleSlack> slack_tuples(const Instance& instance);

/// SLACK: tuples sorted by non-increasing slack (stable), concatenated, then
/// List Scheduling.
Schedule slack_heuristic(const Instance& instance);

struct CriticalInfo {
  JobIndex job;
  std::size_t k;
  MachineIndex machine;
};

CriticalInfo critical_info(const Schedule& schedule);

}  // namespace pcmax
