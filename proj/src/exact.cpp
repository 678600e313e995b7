#include "pcmax/exact.hpp"

#include <algorithm>
#include <stdexcept>

#include "pcmax/competitors.hpp"
#include "pcmax/heuristics.hpp"

namespace pcmax {

Time ExactResult::opt() const {
  if (!solved()) throw std::logic_error("exact search hit its node limit; no optimum");
  return upper;
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const Instance& instance, Time lower, Time incumbent, std::uint64_t node_limit)
      : instance_(instance),
        m_(static_cast<std::size_t>(instance.machines())),
        lower_(lower),
        upper_(incumbent),
        node_limit_(node_limit),
        loads_(m_, 0),
        current_(instance.size()),
        suffix_(instance.size() + 1, 0) {
    for (std::size_t j = instance.size(); j-- > 0;) suffix_[j] = suffix_[j + 1] + instance.time(j);
  }

  // Returns false if the node limit stopped the search.
  bool run() {
    dfs(0, 0);
    return !aborted_;
  }

  Time upper() const { return upper_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::optional<std::vector<MachineIndex>>& best() const { return best_; }

 private:
  void dfs(JobIndex j, Time max_load) {
    if (aborted_ || upper_ <= lower_) return;
    if (++nodes_ > node_limit_) {
      aborted_ = true;
      return;
    }
    if (j == instance_.size()) {
      upper_ = max_load;
      best_ = current_;
      return;
    }
    // Spare room strictly below the incumbent must hold the remaining work.
    Time room = 0;
    for (Time load : loads_) room += std::max<Time>(0, upper_ - 1 - load);
    if (room < suffix_[j]) return;

    const Time t = instance_.time(j);
    for (MachineIndex i = 0; i < m_; ++i) {
      if (loads_[i] + t >= upper_) continue;
      bool duplicate = false;
      for (MachineIndex e = 0; e < i; ++e) {
        if (loads_[e] == loads_[i]) {
          duplicate = true;
          break;
        }
      }
      if (duplicate) continue;
      loads_[i] += t;
      current_[j] = i;
      dfs(j + 1, std::max(max_load, loads_[i]));
      loads_[i] -= t;
      if (aborted_ || upper_ <= lower_) return;
    }
  }

  const Instance& instance_;
  std::size_t m_;
  Time lower_;
  Time upper_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<Time> loads_;
  std::vector<MachineIndex> current_;
  std::vector<Time> suffix_;
  std::optional<std::vector<MachineIndex>> best_;
};

}  // namespace

ExactResult exact_opt(const Instance& instance, std::uint64_t node_limit) {
  const Time lower = lower_bounds(instance).lb_integer();

  Schedule incumbent = lpt_rev(instance).schedule;
  for (Schedule candidate : {slack_heuristic(instance), combine(instance)}) {
    if (candidate.makespan() < incumbent.makespan()) incumbent = std::move(candidate);
  }
  if (incumbent.makespan() <= lower) {
    return {ExactStatus::optimal, lower, incumbent.makespan(), std::move(incumbent), 0};
  }

  BranchAndBound search(instance, lower, incumbent.makespan(), node_limit);
  const bool complete = search.run();

  Schedule best = std::move(incumbent);
  if (search.best()) {
    Assignment assignment(static_cast<std::size_t>(instance.machines()));
    const auto& machine_of = *search.best();
    for (JobIndex j = 0; j < instance.size(); ++j) assignment[machine_of[j]].push_back(j);
    best = evaluate(instance, std::move(assignment));
  }
  const bool proven = complete || best.makespan() <= lower;
  return {proven ? ExactStatus::optimal : ExactStatus::node_limit,
          proven ? best.makespan() : lower, best.makespan(), std::move(best), search.nodes()};
}

AposterioriReport aposteriori_check(const Instance& instance, const Schedule& schedule, Time opt) {
  AposterioriReport r;
  const Rational m(instance.machines());
  const Rational optimum(opt);
  const JobIndex crit = schedule.critical_job();
  const Rational p_crit(instance.time(crit));

  r.large_critical_applies = p_crit > optimum / Rational(3);
  if (r.large_critical_applies && schedule.makespan() != opt) {
    r.large_critical_holds = false;
    r.violations.push_back("critical job exceeds opt/3 but makespan " +
                           std::to_string(schedule.makespan()) + " != opt " + std::to_string(opt));
  }

  Time prefix = 0;
  for (JobIndex j = 0; j <= crit; ++j) prefix += instance.time(j);
  const Rational tail = p_crit * (Rational(1) - Rational(1) / m);
  const Rational middle = Rational(prefix) / m + tail;
  if (Rational(schedule.makespan()) > middle) {
    r.chain_first_holds = false;
    r.violations.push_back("makespan exceeds prefix average plus critical tail");
  }
  if (middle > optimum + tail) {
    r.chain_second_holds = false;
    r.violations.push_back("prefix average exceeds opt");
  }

  for (JobIndex j = 0; j < instance.size(); ++j) {
    const auto pos = static_cast<std::int64_t>(schedule.position_of(j));
    if (Rational(instance.time(j)) * Rational(pos) > optimum) {
      r.positional_holds = false;
      r.violations.push_back("job " + std::to_string(j) + " in position " + std::to_string(pos) +
                             " exceeds opt/position");
    }
  }
  return r;
}

}  // namespace pcmax
