#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pcmax/rational.hpp"

namespace pcmax::lp {

enum class Sense { minimize, maximize };
enum class Relation { le, eq, ge };
enum class VarSign { nonneg, nonpos, free };

std::string_view to_string(Relation rel);
std::string_view to_string(VarSign sign);

struct Variable {
  std::string name;
  VarSign sign = VarSign::nonneg;
};

/// A linear row over the model's variables, stored dense.
struct Constraint {
  std::string name;
  std::vector<Rational> coeffs;
  Relation relation = Relation::le;
  Rational rhs;
};

/// Sparse term list used while building rows: (variable name, coefficient).
using Terms = std::vector<std::pair<std::string, Rational>>;

/// A linear program over rationals. Columns are addressed by name; every name
/// maps to exactly one column.
class LpModel {
 public:
  explicit LpModel(std::string id, Sense sense = Sense::minimize) : id_(std::move(id)), sense_(sense) {}

  const std::string& id() const { return id_; }
  Sense sense() const { return sense_; }

  std::size_t add_variable(std::string name, VarSign sign = VarSign::nonneg);
  /// Column of `name`; throws std::out_of_range if unknown.
  std::size_t column(std::string_view name) const;
  bool has_variable(std::string_view name) const;

  /// Adds terms to the objective (coefficients on repeated names accumulate).
  void set_objective(const Terms& terms);
  void add_constraint(std::string name, const Terms& terms, Relation relation, Rational rhs);

  std::size_t num_variables() const { return variables_.size(); }
  std::size_t num_constraints() const { return constraints_.size(); }
  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const std::vector<Rational>& objective() const { return objective_; }

  /// Objective value of a full assignment (one value per column).
  Rational objective_value(const std::vector<Rational>& values) const;

 private:
  std::vector<Rational> row_from(const Terms& terms) const;

  std::string id_;
  Sense sense_;
  std::vector<Variable> variables_;
  std::vector<Rational> objective_;
  std::vector<Constraint> constraints_;
};

/// The LP dual, derived mechanically: one dual variable "y[<row name>]" per
/// constraint and one dual row per primal column.
LpModel derive_dual(const LpModel& primal);

}  // namespace pcmax::lp
