#pragma once

#include <string>

#include "pcmax/lp_model.hpp"

// Builders for the worst-case LP models used to bound LPT and LPT-REV. Each
// model normalizes one side of the ratio to 1: either the heuristic value
// (and minimizes opt) or the optimum (and maximizes the heuristic value).
//
// Variable names: "p[j]" processing time of the j-th largest job (1-based),
// "opt", "sum_p", "t_c" (critical machine before its last job), "t_prime"
// (one non-critical machine), "t_second" (all other machines), "p_n",
// "p_prime", "sl", "alpha", "y", and "lambda[i]" for dual multipliers.

namespace pcmax::lp {

enum class ModelKind {
  noncritical_k,        ///< k jobs on a non-critical machine, minimize opt
  noncritical_k_dual,   ///< its dual on the reduced (p_n eliminated) model
  slack76,              ///< LPT' critical on M1 when p_{2m+1} >= p_1 - p_m
  case1_not_m1,         ///< min(LPT, LPT') when LPT' is not critical on M1
  case1_not_m1_dual,
  case2,                ///< p_{2m+1} <= p_1 - p_m, LPT alone
  case2_dual,
  appendix_a,           ///< n = 3m, three jobs per machine in the optimum
  appendix_b,           ///< 2m+2 <= n <= 3m-1 backbone plus a sub-case
};

enum class AppendixBCase {
  backbone,
  first_three_on_two,    ///< m = 4, n in {10, 11}
  first_three_on_three,  ///< m = 4, n in {10, 11}
  tprime_p1_p6,          ///< m = 3, n = 8
  tprime_p2_p5,          ///< m = 3, n = 8
  tprime_p3_p4,          ///< m = 3, n = 8
};

struct ModelParams {
  int m = 0;
  int k = 0;
  int n = 0;
  AppendixBCase subcase = AppendixBCase::backbone;
};

std::string to_string(ModelKind kind);
std::string to_string(AppendixBCase subcase);
/// Short "m=.., k=.." style rendering of the parameters relevant to `kind`.
std::string describe(ModelKind kind, const ModelParams& params);

/// Dispatches to the builder for `kind`. Throws std::invalid_argument on
/// parameters outside the builder's range.
LpModel build_model(ModelKind kind, const ModelParams& params);

LpModel noncritical_k_model(int m, int k);       // m >= 2, k >= 1
LpModel noncritical_k_dual_model(int m, int k);  // m >= 2, k >= 1
LpModel slack76_model(int m);                    // m >= 3
LpModel case1_not_m1_model(int m);               // m >= 3
LpModel case1_not_m1_dual_model(int m);          // m >= 3
LpModel case2_model(int m);                      // m >= 3
LpModel case2_dual_model(int m);                 // m >= 3
LpModel appendix_a_model(int m);                 // m >= 2
LpModel appendix_b_model(int m, int n, AppendixBCase subcase);

}  // namespace pcmax::lp
