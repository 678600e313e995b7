#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcmax/lp_models.hpp"
#include "pcmax/simplex.hpp"

namespace pcmax::lp {

/// One verified model: solver optimum against the published value, the
/// closed-form certificate (when one exists) and the gap between the model's
/// optimum and the optimum of its mechanically derived dual.
struct BatteryLine {
  ModelKind kind;
  ModelParams params;
  SolveStatus status = SolveStatus::infeasible;
  Rational optimum;
  std::optional<Rational> expected;
  /// "pass", "fail" or "-" when the family has no closed-form certificate.
  std::string certificate = "-";
  Rational duality_gap;
  bool ok = false;

  std::string to_string() const;
};

struct BatteryOptions {
  int certificate_m_max = 25;  ///< upper m for the certified families
  int k_max = 6;               ///< upper k for NonCriticalK
};

/// Solves every model family at the published parameter points and checks
/// the certified families over their whole range.
std::vector<BatteryLine> run_lp_battery(const BatteryOptions& options = {});

/// Published optimum of a model, when one is stated. For the models that fix
/// the heuristic value to 1 this is opt, i.e. the reciprocal of the ratio.
std::optional<Rational> published_optimum(ModelKind kind, const ModelParams& params);

}  // namespace pcmax::lp
