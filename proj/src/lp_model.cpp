#include "pcmax/lp_model.hpp"

#include <stdexcept>

namespace pcmax::lp {

std::string_view to_string(Relation rel) {
  switch (rel) {
    case Relation::le: return "<=";
    case Relation::eq: return "=";
    case Relation::ge: return ">=";
  }
  return "?";
}

std::string_view to_string(VarSign sign) {
  switch (sign) {
    case VarSign::nonneg: return ">=0";
    case VarSign::nonpos: return "<=0";
    case VarSign::free: return "free";
  }
  return "?";
}

std::size_t LpModel::add_variable(std::string name, VarSign sign) {
  if (has_variable(name)) throw std::invalid_argument("duplicate variable " + name);
  variables_.push_back({std::move(name), sign});
  objective_.emplace_back(0);
  for (auto& c : constraints_) c.coeffs.emplace_back(0);
  return variables_.size() - 1;
}

bool LpModel::has_variable(std::string_view name) const {
  for (const auto& v : variables_) {
    if (v.name == name) return true;
  }
  return false;
}

std::size_t LpModel::column(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i].name == name) return i;
  }
  throw std::out_of_range("unknown variable " + std::string(name) + " in " + id_);
}

std::vector<Rational> LpModel::row_from(const Terms& terms) const {
  std::vector<Rational> row(variables_.size());
  for (const auto& [name, coeff] : terms) row[column(name)] += coeff;
  return row;
}

void LpModel::set_objective(const Terms& terms) { objective_ = row_from(terms); }

void LpModel::add_constraint(std::string name, const Terms& terms, Relation relation, Rational rhs) {
  constraints_.push_back({std::move(name), row_from(terms), relation, std::move(rhs)});
}

Rational LpModel::objective_value(const std::vector<Rational>& values) const {
  if (values.size() != variables_.size()) throw std::invalid_argument("assignment size mismatch");
  Rational total;
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (!objective_[j].is_zero()) total += objective_[j] * values[j];
  }
  return total;
}

LpModel derive_dual(const LpModel& primal) {
  const bool minimize = primal.sense() == Sense::minimize;
  LpModel dual("dual of " + primal.id(), minimize ? Sense::maximize : Sense::minimize);

  // Sign of the multiplier follows the row relation; for a minimization
  // primal a >= row pairs with y >= 0, for a maximization primal with y <= 0.
  for (const auto& c : primal.constraints()) {
    VarSign sign = VarSign::free;
    if (c.relation == Relation::ge) sign = minimize ? VarSign::nonneg : VarSign::nonpos;
    if (c.relation == Relation::le) sign = minimize ? VarSign::nonpos : VarSign::nonneg;
    dual.add_variable("y[" + c.name + "]", sign);
  }

  Terms objective;
  for (std::size_t i = 0; i < primal.num_constraints(); ++i) {
    const auto& c = primal.constraints()[i];
    if (!c.rhs.is_zero()) objective.emplace_back(dual.variables()[i].name, c.rhs);
  }
  dual.set_objective(objective);

  for (std::size_t j = 0; j < primal.num_variables(); ++j) {
    Terms row;
    for (std::size_t i = 0; i < primal.num_constraints(); ++i) {
      const auto& a = primal.constraints()[i].coeffs[j];
      if (!a.is_zero()) row.emplace_back(dual.variables()[i].name, a);
    }
    // Column sign decides the relation: for a minimization primal x >= 0
    // gives A^T y <= c; x <= 0 flips it; a free column gives equality.
    Relation rel = Relation::eq;
    const VarSign sign = primal.variables()[j].sign;
    if (sign == VarSign::nonneg) rel = minimize ? Relation::le : Relation::ge;
    if (sign == VarSign::nonpos) rel = minimize ? Relation::ge : Relation::le;
    dual.add_constraint("col[" + primal.variables()[j].name + "]", row, rel, primal.objective()[j]);
  }
  return dual;
}

}  // namespace pcmax::lp
