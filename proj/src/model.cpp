#include "pcmax/model.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pcmax/formulas.hpp"

namespace pcmax {

Instance::Instance(int machines, std::vector<Time> times) : machines_(machines) {
  if (machines < 1) throw std::invalid_argument("instance needs at least one machine");
  if (times.empty()) throw std::invalid_argument("instance needs at least one job");
  for (Time t : times) {
    if (t < 0) throw std::invalid_argument("processing times must be non-negative");
  }
  original_.resize(times.size());
  std::iota(original_.begin(), original_.end(), std::size_t{0});
  std::stable_sort(original_.begin(), original_.end(),
                   [&](std::size_t a, std::size_t b) { return times[a] > times[b]; });
  times_.reserve(times.size());
  for (std::size_t idx : original_) times_.push_back(times[idx]);
  total_ = std::accumulate(times_.begin(), times_.end(), Time{0});
}

Schedule evaluate(const Instance& instance, Assignment assignment) {
  const std::size_t n = instance.size();
  const auto m = static_cast<std::size_t>(instance.machines());
  if (assignment.size() != m) {
    throw std::invalid_argument("assignment has " + std::to_string(assignment.size()) +
                                " machines, instance has " + std::to_string(m));
  }
  constexpr auto kUnassigned = static_cast<MachineIndex>(-1);

  Schedule s;
  s.loads_.assign(m, 0);
  s.machine_of_.assign(n, kUnassigned);
  s.position_of_.assign(n, 0);
  for (MachineIndex i = 0; i < m; ++i) {
    for (std::size_t pos = 0; pos < assignment[i].size(); ++pos) {
      JobIndex j = assignment[i][pos];
      if (j >= n) throw std::invalid_argument("job index " + std::to_string(j) + " out of range");
      if (s.machine_of_[j] != kUnassigned) {
        throw std::invalid_argument("job " + std::to_string(j) + " assigned twice");
      }
      s.machine_of_[j] = i;
      s.position_of_[j] = pos + 1;
      s.loads_[i] += instance.time(j);
    }
  }
  for (JobIndex j = 0; j < n; ++j) {
    if (s.machine_of_[j] == kUnassigned) {
      throw std::invalid_argument("job " + std::to_string(j) + " not assigned");
    }
  }

  s.makespan_ = *std::max_element(s.loads_.begin(), s.loads_.end());
  MachineIndex crit = m;
  for (MachineIndex i = 0; i < m; ++i) {
    if (s.loads_[i] == s.makespan_ && !assignment[i].empty()) {
      crit = i;
      break;
    }
  }
  s.critical_machine_ = crit;
  s.critical_job_ = assignment[crit].back();
  s.critical_pos_ = assignment[crit].size();
  s.assignment_ = std::move(assignment);
  return s;
}

Time BoundReport::lb_integer() const {
  return static_cast<Time>(lb_best.ceil().numerator());
}

BoundReport lower_bounds(const Instance& instance) {
  const int m = instance.machines();
  const std::size_t n = instance.size();
  auto times = instance.times();

  BoundReport r;
  r.lb_avg = Rational(instance.total()) / Rational(m);
  r.lb_pmax = instance.max_time();
  r.lb_best = std::max(r.lb_avg, Rational(r.lb_pmax));
  if (n >= 2 * static_cast<std::size_t>(m) + 1) {
    r.lb_three_smallest = times[n - 3] + times[n - 2] + times[n - 1];
    r.lb_best = std::max(r.lb_best, Rational(*r.lb_three_smallest));
  }

  Rational lpt_ceiling = graham_bound(m);
  r.ratio_ceilings["lpt"] = lpt_ceiling;
  r.ratio_ceilings["combine"] = lpt_ceiling;
  r.ratio_ceilings["lpt_rev"] = m == 1 ? Rational(1) : lpt_rev_bound(m);
  return r;
}

}  // namespace pcmax
