#pragma once

#include <cstddef>
#include <vector>

#include "pcmax/lp_model.hpp"

namespace pcmax::lp {

enum class SolveStatus { optimal, infeasible, unbounded };

const char* to_string(SolveStatus status);

struct SolveResult {
  SolveStatus status = SolveStatus::infeasible;
  Rational objective;            ///< valid when optimal
  std::vector<Rational> values;  ///< one per model column, valid when optimal
  std::size_t pivots = 0;
};

/// Exact two-phase primal simplex on a dense rational tableau. Bland's rule
/// (lowest-index entering column, lowest-index leaving basic variable on ratio
/// ties) guarantees termination on degenerate models.
SolveResult simplex_solve(const LpModel& model);

}  // namespace pcmax::lp
