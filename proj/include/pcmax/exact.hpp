#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcmax/model.hpp"

namespace pcmax {

inline constexpr std::uint64_t kDefaultNodeLimit = 10'000'000;

enum class ExactStatus { optimal, node_limit };

/// Outcome of the branch-and-bound. When the node limit is hit the result
/// is explicitly unsolved: `upper` is the best makespan found and `lower` the
/// proven lower bound, and no optimum is claimed.
struct ExactResult {
  ExactStatus status;
  Time lower;
  Time upper;
  Schedule schedule;  ///< attains `upper`
  std::uint64_t nodes;

  bool solved() const { return status == ExactStatus::optimal; }
  /// Throws std::logic_error when unsolved.
  Time opt() const;
};

/// Optimal makespan by depth-first branch-and-bound. Jobs are branched in
/// sorted order over machines; a branch is skipped when its machine has the
/// same load as a lower-indexed one, when the job would reach the incumbent,
/// or when the spare capacity below the incumbent cannot hold the remaining
/// work. The incumbent starts at the best of LPT-REV, SLACK and COMBINE.
/// Single-threaded, so the result does not depend on scheduling.
ExactResult exact_opt(const Instance& instance, std::uint64_t node_limit = kDefaultNodeLimit);

/// Outcome of the classical a-posteriori LPT checks against a known optimum.
struct AposterioriReport {
  /// p_{j'} > opt/3 ...
  bool large_critical_applies = false;
  /// ... implies makespan == opt.
  bool large_critical_holds = true;
  /// makespan <= sum_{j<=j'} p_j / m + p_{j'} (1 - 1/m)
  bool chain_first_holds = true;
  /// sum_{j<=j'} p_j / m + p_{j'} (1 - 1/m) <= opt + p_{j'} (1 - 1/m)
  bool chain_second_holds = true;
  /// every job in position q on its machine has p <= opt/q
  bool positional_holds = true;
  std::vector<std::string> violations;

  bool all_pass() const {
    return large_critical_holds && chain_first_holds && chain_second_holds && positional_holds;
  }
};

/// Checks an LPT schedule against the exact optimum `opt`.
AposterioriReport aposteriori_check(const Instance& instance, const Schedule& schedule, Time opt);

}  // namespace pcmax
