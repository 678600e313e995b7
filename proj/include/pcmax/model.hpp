#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pcmax/rational.hpp"

namespace pcmax {

using Time = std::int64_t;
using JobIndex = std::size_t;
using MachineIndex = std::size_t;

/// Per-machine job lists, each in assignment order. Job indices refer to the
/// sorted order of an Instance.
using Assignment = std::vector<std::vector<JobIndex>>;

/// A P||Cmax instance: m identical machines and n jobs. Processing times are
/// stored sorted non-increasing; the position each job had in the input is
/// kept for reporting. The sort is stable, so equal times keep input order.
class Instance {
 public:
  Instance(int machines, std::vector<Time> times);

  int machines() const { return machines_; }
  std::size_t size() const { return times_.size(); }

  std::span<const Time> times() const { return times_; }
  Time time(JobIndex j) const { return times_.at(j); }
  /// Input position of the j-th sorted job.
  std::size_t original_index(JobIndex j) const { return original_.at(j); }
  std::span<const std::size_t> original_indices() const { return original_; }

  Time total() const { return total_; }
  Time max_time() const { return times_.front(); }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  int machines_;
  std::vector<Time> times_;
  std::vector<std::size_t> original_;
  Time total_ = 0;
};

/// An evaluated schedule. Only produced by evaluate(), so its invariants hold
/// by construction: every job appears exactly once, loads are sums, and the
/// critical machine is the lowest-indexed machine attaining the makespan.
class Schedule {
 public:
  const Assignment& assignment() const { return assignment_; }
  std::span<const Time> loads() const { return loads_; }
  Time load(MachineIndex i) const { return loads_.at(i); }
  int machines() const { return static_cast<int>(loads_.size()); }
  std::size_t jobs() const { return machine_of_.size(); }

  Time makespan() const { return makespan_; }
  MachineIndex critical_machine() const { return critical_machine_; }
  /// Last job (in assignment order) on the critical machine.
  JobIndex critical_job() const { return critical_job_; }
  /// Number of jobs on the critical machine; the critical job is the k-th.
  std::size_t critical_pos() const { return critical_pos_; }

  MachineIndex machine_of(JobIndex j) const { return machine_of_.at(j); }
  /// 1-based position of job j on its machine.
  std::size_t position_of(JobIndex j) const { return position_of_.at(j); }

  friend Schedule evaluate(const Instance& instance, Assignment assignment);

 private:
  Schedule() = default;

  Assignment assignment_;
  std::vector<Time> loads_;
  std::vector<MachineIndex> machine_of_;
  std::vector<std::size_t> position_of_;
  Time makespan_ = 0;
  MachineIndex critical_machine_ = 0;
  JobIndex critical_job_ = 0;
  std::size_t critical_pos_ = 0;
};

/// Builds a Schedule from per-machine job lists. Throws std::invalid_argument
/// when the machine count differs from the instance, or a job is duplicated,
/// missing, or out of range.
///
/// With all-zero loads the lowest-indexed machine may be empty; the critical
/// machine is then the lowest-indexed non-empty one.
Schedule evaluate(const Instance& instance, Assignment assignment);

/// Lower bounds on the optimal makespan and the ratio ceilings that apply to
/// the algorithms in this library.
struct BoundReport {
  Rational lb_avg;
  Time lb_pmax = 0;
  /// p[n-3] + p[n-2] + p[n-1]; only when n >= 2m+1.
  std::optional<Time> lb_three_smallest;
  Rational lb_best;
  /// Keyed by algorithm name ("lpt", "lpt_rev", "combine").
  std::map<std::string, Rational> ratio_ceilings;

  /// Smallest integer makespan compatible with lb_best.
  Time lb_integer() const;
};

BoundReport lower_bounds(const Instance& instance);

}  // namespace pcmax
