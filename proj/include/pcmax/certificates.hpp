#pragma once

#include <string>
#include <vector>

#include "pcmax/lp_model.hpp"
#include "pcmax/lp_models.hpp"

namespace pcmax::lp {

enum class CertificateRole { primal, dual };

/// A claimed LP solution: one value per model column plus the objective value
/// it is supposed to reach.
struct Certificate {
  std::string model_id;
  CertificateRole role = CertificateRole::primal;
  std::vector<Rational> values;
  Rational claimed_objective;

  /// Copy with values[index] += delta.
  Certificate perturbed(std::size_t index, const Rational& delta) const;
};

/// Closed-form optimal solutions for the certified model families:
///   noncritical_k / noncritical_k_dual   m >= k+2, k >= 1
///   case1_not_m1 / case1_not_m1_dual     m >= 4
///   case2 / case2_dual                   m >= 4
/// Throws std::invalid_argument for other kinds or out-of-range parameters.
/// The n = 2m+1 dual certificates fail for m = 3 (lambda[2] would be
/// negative); that case is settled by simplex_solve instead.
Certificate paper_certificate(ModelKind kind, const ModelParams& params);

struct CertificateReport {
  std::vector<std::string> violated_constraints;
  std::vector<std::string> sign_violations;
  Rational objective;
  bool objective_matches = false;

  bool feasible() const { return violated_constraints.empty() && sign_violations.empty(); }
  bool accepted() const { return feasible() && objective_matches; }
};

/// Checks every row and sign condition exactly, and recomputes the objective.
/// Throws std::invalid_argument on a dimension mismatch.
CertificateReport check_certificate(const LpModel& model, const Certificate& certificate);

struct PairReport {
  CertificateReport primal;
  CertificateReport dual;
  Rational gap;  ///< primal objective - dual objective

  bool ok() const { return primal.accepted() && dual.accepted() && gap.is_zero(); }
};

/// Both certificates feasible, both objectives as claimed, and equal.
PairReport check_pair(const LpModel& primal_model, const Certificate& primal,
                      const LpModel& dual_model, const Certificate& dual);

}  // namespace pcmax::lp
