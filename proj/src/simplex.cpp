#include "pcmax/simplex.hpp"

#include <optional>

namespace pcmax::lp {

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::unbounded: return "unbounded";
  }
  return "?";
}

namespace {

// Tableau over standard-form columns: every column is >= 0 and every row is
// an equality with non-negative right-hand side.
class Tableau {
 public:
  explicit Tableau(const LpModel& model) : model_(model) {
    for (std::size_t j = 0; j < model.num_variables(); ++j) {
      switch (model.variables()[j].sign) {
        case VarSign::nonneg: origin_.push_back({j, 1}); break;
        case VarSign::nonpos: origin_.push_back({j, -1}); break;
        case VarSign::free:
          origin_.push_back({j, 1});
          origin_.push_back({j, -1});
          break;
      }
    }
    const std::size_t structural = origin_.size();

    struct Row {
      std::vector<Rational> coeffs;
      Relation rel;
      Rational rhs;
    };
    std::vector<Row> rows;
    std::size_t slacks = 0;
    std::size_t artificials = 0;
    for (const auto& c : model.constraints()) {
      Row row{std::vector<Rational>(structural), c.relation, c.rhs};
      for (std::size_t s = 0; s < structural; ++s) {
        const auto& a = c.coeffs[origin_[s].column];
        if (!a.is_zero()) row.coeffs[s] = origin_[s].sign > 0 ? a : -a;
      }
      if (row.rhs.sign() < 0) {
        for (auto& v : row.coeffs) v = -v;
        row.rhs = -row.rhs;
        if (row.rel == Relation::le) {
          row.rel = Relation::ge;
        } else if (row.rel == Relation::ge) {
          row.rel = Relation::le;
        }
      }
      if (row.rel != Relation::eq) ++slacks;
      if (row.rel != Relation::le) ++artificials;
      rows.push_back(std::move(row));
    }

    const std::size_t first_slack = structural;
    const std::size_t first_artificial = first_slack + slacks;
    width_ = first_artificial + artificials;
    artificial_.assign(width_, false);
    for (std::size_t c = first_artificial; c < width_; ++c) artificial_[c] = true;

    std::size_t next_slack = first_slack;
    std::size_t next_artificial = first_artificial;
    for (auto& row : rows) {
      std::vector<Rational> t(width_ + 1);
      for (std::size_t s = 0; s < structural; ++s) t[s] = std::move(row.coeffs[s]);
      t[width_] = std::move(row.rhs);
      if (row.rel == Relation::le) {
        t[next_slack] = 1;
        basis_.push_back(next_slack++);
      } else {
        if (row.rel == Relation::ge) t[next_slack++] = -1;
        t[next_artificial] = 1;
        basis_.push_back(next_artificial++);
      }
      table_.push_back(std::move(t));
    }
  }

  SolveResult solve() {
    SolveResult result;
    if (has_artificial_columns()) {
      std::vector<Rational> phase1(width_);
      for (std::size_t c = 0; c < width_; ++c) {
        if (artificial_[c]) phase1[c] = 1;
      }
      run(phase1, /*allow_artificial=*/true);  // bounded below by zero
      if (objective(phase1).sign() > 0) {
        result.status = SolveStatus::infeasible;
        result.pivots = pivots_;
        return result;
      }
      drive_out_artificials();
    }

    const bool maximize = model_.sense() == Sense::maximize;
    std::vector<Rational> phase2(width_);
    for (std::size_t s = 0; s < origin_.size(); ++s) {
      Rational c = model_.objective()[origin_[s].column];
      if (origin_[s].sign < 0) c = -c;
      phase2[s] = maximize ? -c : c;
    }
    if (!run(phase2, /*allow_artificial=*/false)) {
      result.status = SolveStatus::unbounded;
      result.pivots = pivots_;
      return result;
    }

    std::vector<Rational> standard(width_);
    for (std::size_t r = 0; r < table_.size(); ++r) standard[basis_[r]] = table_[r][width_];
    result.values.assign(model_.num_variables(), Rational());
    for (std::size_t s = 0; s < origin_.size(); ++s) {
      if (standard[s].is_zero()) continue;
      if (origin_[s].sign > 0) {
        result.values[origin_[s].column] += standard[s];
      } else {
        result.values[origin_[s].column] -= standard[s];
      }
    }
    result.status = SolveStatus::optimal;
    result.objective = model_.objective_value(result.values);
    result.pivots = pivots_;
    return result;
  }

 private:
  struct Origin {
    std::size_t column;
    int sign;
  };

  bool has_artificial_columns() const {
    for (bool a : artificial_) {
      if (a) return true;
    }
    return false;
  }

  Rational objective(const std::vector<Rational>& cost) const {
    Rational total;
    for (std::size_t r = 0; r < table_.size(); ++r) {
      const auto& c = cost[basis_[r]];
      if (!c.is_zero()) total += c * table_[r][width_];
    }
    return total;
  }

  // Minimizes cost over the current basis. Returns false when unbounded.
  bool run(const std::vector<Rational>& cost, bool allow_artificial) {
    for (;;) {
      std::vector<bool> basic(width_, false);
      for (std::size_t b : basis_) basic[b] = true;

      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < width_ && !entering; ++j) {
        if (basic[j] || (!allow_artificial && artificial_[j])) continue;
        Rational reduced = cost[j];
        for (std::size_t r = 0; r < table_.size(); ++r) {
          const auto& cb = cost[basis_[r]];
          const auto& a = table_[r][j];
          if (!cb.is_zero() && !a.is_zero()) reduced -= cb * a;
        }
        if (reduced.sign() < 0) entering = j;
      }
      if (!entering) return true;

      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t r = 0; r < table_.size(); ++r) {
        const auto& a = table_[r][*entering];
        if (a.sign() <= 0) continue;
        Rational ratio = table_[r][width_] / a;
        if (!leaving || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[*leaving])) {
          leaving = r;
          best_ratio = std::move(ratio);
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }

  void drive_out_artificials() {
    for (std::size_t r = 0; r < table_.size();) {
      if (!artificial_[basis_[r]]) {
        ++r;
        continue;
      }
      std::optional<std::size_t> replacement;
      for (std::size_t j = 0; j < width_; ++j) {
        if (!artificial_[j] && !table_[r][j].is_zero()) {
          replacement = j;
          break;
        }
      }
      if (replacement) {
        pivot(r, *replacement);
        ++r;
      } else {
        // Redundant row: every non-artificial coefficient is zero.
        table_.erase(table_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
      }
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    ++pivots_;
    auto& p = table_[row];
    const Rational inv = p[col].reciprocal();
    std::vector<std::size_t> nonzero;
    for (std::size_t j = 0; j <= width_; ++j) {
      if (p[j].is_zero()) continue;
      p[j] *= inv;
      nonzero.push_back(j);
    }
    for (std::size_t r = 0; r < table_.size(); ++r) {
      if (r == row || table_[r][col].is_zero()) continue;
      const Rational factor = table_[r][col];
      for (std::size_t j : nonzero) table_[r][j] -= factor * p[j];
    }
    basis_[row] = col;
  }

  const LpModel& model_;
  std::vector<Origin> origin_;
  std::size_t width_ = 0;
  std::vector<bool> artificial_;
  std::vector<std::vector<Rational>> table_;
  std::vector<std::size_t> basis_;
  std::size_t pivots_ = 0;
};

}  // namespace

SolveResult simplex_solve(const LpModel& model) { return Tableau(model).solve(); }

}  // namespace pcmax::lp
