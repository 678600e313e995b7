#include "pcmax/lp_models.hpp"

#include <stdexcept>

namespace pcmax::lp {
namespace {

std::string p(int j) { return "p[" + std::to_string(j) + "]"; }
std::string lam(int i) { return "lambda[" + std::to_string(i) + "]"; }

Rational frac(std::int64_t num, std::int64_t den) { return Rational(num) / Rational(den); }

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

// The 2m+1 job model shared by the two n = 2m+1 cases. Rows are named
// c1..c{3m+5} after their dual multipliers.
LpModel two_m_plus_one(const std::string& id, int m, bool case_two) {
  require(m >= 3, id + ": needs m >= 3");
  const int n = 2 * m + 1;
  LpModel model(id, Sense::maximize);
  for (int j = 1; j <= n; ++j) model.add_variable(p(j));
  model.add_variable("alpha");
  model.add_variable("y");
  model.set_objective({{"y", 1}});

  int row = 0;
  auto name = [&] { return "c" + std::to_string(++row); };

  Terms all;
  for (int j = 1; j <= n; ++j) all.emplace_back(p(j), 1);
  model.add_constraint(name(), all, Relation::le, Rational(m));  // OPT = 1
  model.add_constraint(name(), {{p(2 * m - 1), 1}, {p(2 * m), 1}, {p(n), 1}}, Relation::le, 1);
  for (int j = 1; j <= 2 * m; ++j) {
    model.add_constraint(name(), {{p(j + 1), 1}, {p(j), -1}}, Relation::le, 0);
  }
  for (int j = 1; j <= m; ++j) {
    model.add_constraint(name(), {{p(j), 1}, {p(2 * m - j + 1), 1}, {"alpha", -1}}, Relation::ge, 0);
  }
  model.add_constraint(name(), {{p(n), 1}, {"alpha", 1}, {"y", -1}}, Relation::ge, 0);
  model.add_constraint(name(), {{p(n), 1}, {p(1), -1}, {p(m), 1}},
                       case_two ? Relation::le : Relation::ge, 0);
  if (!case_two) {
    model.add_constraint(name(), {{p(1), 1}, {p(m + 1), 1}, {"y", -1}}, Relation::ge, 0);
  }
  return model;
}

// Dual of two_m_plus_one written row by row per primal column. For the second
// case lambda[3m+5] is absent and lambda[3m+4] changes sign.
LpModel two_m_plus_one_dual(const std::string& id, int m, bool case_two) {
  require(m >= 3, id + ": needs m >= 3");
  const int last = case_two ? 3 * m + 4 : 3 * m + 5;
  LpModel model(id, Sense::minimize);
  for (int i = 1; i <= last; ++i) {
    VarSign sign = i <= 2 * m + 2 ? VarSign::nonneg : VarSign::nonpos;
    if (case_two && i == 3 * m + 4) sign = VarSign::nonneg;
    model.add_variable(lam(i), sign);
  }
  model.set_objective({{lam(1), m}, {lam(2), 1}});

  // Terms referring to lambda[3m+5] are dropped in the second case.
  auto add = [&](const std::string& name, Terms terms, const Rational& rhs) {
    Terms kept;
    for (auto& t : terms) {
      if (case_two && t.first == lam(3 * m + 5)) continue;
      kept.push_back(std::move(t));
    }
    model.add_constraint(name, kept, Relation::ge, rhs);
  };

  add("col[" + p(1) + "]",
      {{lam(1), 1}, {lam(3), -1}, {lam(2 * m + 3), 1}, {lam(3 * m + 4), -1}, {lam(3 * m + 5), 1}}, 0);
  for (int j = 2; j <= m - 1; ++j) {
    add("col[" + p(j) + "]", {{lam(1), 1}, {lam(1 + j), 1}, {lam(2 + j), -1}, {lam(2 * m + 2 + j), 1}},
        0);
  }
  add("col[" + p(m) + "]",
      {{lam(1), 1}, {lam(m + 1), 1}, {lam(m + 2), -1}, {lam(3 * m + 2), 1}, {lam(3 * m + 4), 1}}, 0);
  add("col[" + p(m + 1) + "]",
      {{lam(1), 1}, {lam(m + 2), 1}, {lam(m + 3), -1}, {lam(3 * m + 2), 1}, {lam(3 * m + 5), 1}}, 0);
  for (int j = m + 2; j <= 2 * m - 2; ++j) {
    add("col[" + p(j) + "]",
        {{lam(1), 1}, {lam(1 + j), 1}, {lam(2 + j), -1}, {lam(4 * m + 3 - j), 1}}, 0);
  }
  add("col[" + p(2 * m - 1) + "]",
      {{lam(1), 1}, {lam(2), 1}, {lam(2 * m), 1}, {lam(2 * m + 1), -1}, {lam(2 * m + 4), 1}}, 0);
  add("col[" + p(2 * m) + "]",
      {{lam(1), 1}, {lam(2), 1}, {lam(2 * m + 1), 1}, {lam(2 * m + 2), -1}, {lam(2 * m + 3), 1}}, 0);
  add("col[" + p(2 * m + 1) + "]",
      {{lam(1), 1}, {lam(2), 1}, {lam(2 * m + 2), 1}, {lam(3 * m + 3), 1}, {lam(3 * m + 4), 1}}, 0);
  Terms alpha;
  for (int i = 2 * m + 3; i <= 3 * m + 2; ++i) alpha.emplace_back(lam(i), -1);
  alpha.emplace_back(lam(3 * m + 3), 1);
  add("col[alpha]", alpha, 0);
  add("col[y]", {{lam(3 * m + 3), -1}, {lam(3 * m + 5), -1}}, 1);
  return model;
}

void add_sorted(LpModel& model, int n) {
  for (int j = 1; j < n; ++j) {
    model.add_constraint("sorted" + std::to_string(j), {{p(j + 1), 1}, {p(j), -1}}, Relation::le, 0);
  }
}

}  // namespace

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::noncritical_k: return "NonCriticalK";
    case ModelKind::noncritical_k_dual: return "NonCriticalKDual";
    case ModelKind::slack76: return "Slack76";
    case ModelKind::case1_not_m1: return "Case1NotM1";
    case ModelKind::case1_not_m1_dual: return "Case1NotM1Dual";
    case ModelKind::case2: return "Case2";
    case ModelKind::case2_dual: return "Case2Dual";
    case ModelKind::appendix_a: return "AppendixA";
    case ModelKind::appendix_b: return "AppendixB";
  }
  return "?";
}

std::string to_string(AppendixBCase subcase) {
  switch (subcase) {
    case AppendixBCase::backbone: return "backbone";
    case AppendixBCase::first_three_on_two: return "first3-on-2";
    case AppendixBCase::first_three_on_three: return "first3-on-3";
    case AppendixBCase::tprime_p1_p6: return "t'=p1+p6";
    case AppendixBCase::tprime_p2_p5: return "t'=p2+p5";
    case AppendixBCase::tprime_p3_p4: return "t'=p3+p4";
  }
  return "?";
}

std::string describe(ModelKind kind, const ModelParams& params) {
  std::string out = "m=" + std::to_string(params.m);
  switch (kind) {
    case ModelKind::noncritical_k:
    case ModelKind::noncritical_k_dual:
      out += ",k=" + std::to_string(params.k);
      break;
    case ModelKind::appendix_b:
      out += ",n=" + std::to_string(params.n) + "," + to_string(params.subcase);
      break;
    default:
      break;
  }
  return out;
}

LpModel build_model(ModelKind kind, const ModelParams& params) {
  switch (kind) {
    case ModelKind::noncritical_k: return noncritical_k_model(params.m, params.k);
    case ModelKind::noncritical_k_dual: return noncritical_k_dual_model(params.m, params.k);
    case ModelKind::slack76: return slack76_model(params.m);
    case ModelKind::case1_not_m1: return case1_not_m1_model(params.m);
    case ModelKind::case1_not_m1_dual: return case1_not_m1_dual_model(params.m);
    case ModelKind::case2: return case2_model(params.m);
    case ModelKind::case2_dual: return case2_dual_model(params.m);
    case ModelKind::appendix_a: return appendix_a_model(params.m);
    case ModelKind::appendix_b: return appendix_b_model(params.m, params.n, params.subcase);
  }
  throw std::invalid_argument("unknown model kind");
}

LpModel noncritical_k_model(int m, int k) {
  require(m >= 2 && k >= 1, "NonCriticalK: needs m >= 2, k >= 1");
  LpModel model("NonCriticalK(" + describe(ModelKind::noncritical_k, {m, k}) + ")", Sense::minimize);
  for (const char* v : {"opt", "sum_p", "t_c", "t_prime", "t_second", "p_n", "sl"}) {
    model.add_variable(v);
  }
  model.set_objective({{"opt", 1}});
  model.add_constraint("avg_bound", {{"opt", -m}, {"sum_p", 1}}, Relation::le, 0);
  model.add_constraint("k_jobs", {{"p_n", k}, {"t_prime", -1}}, Relation::le, 0);
  model.add_constraint("tc_below_tprime", {{"t_c", 1}, {"t_prime", -1}}, Relation::le, 0);
  model.add_constraint("others_above_tc", {{"t_c", m - 2}, {"t_second", -1}}, Relation::le, 0);
  model.add_constraint("sum_p_def",
                       {{"t_c", 1}, {"p_n", 1}, {"t_prime", 1}, {"t_second", 1}, {"sum_p", -1}},
                       Relation::eq, 0);
  model.add_constraint("heuristic_one", {{"t_c", 1}, {"p_n", 1}}, Relation::eq, 1);
  model.add_constraint("pn_below_opt_over_k", {{"p_n", 1}, {"sl", 1}, {"opt", -frac(1, k)}},
                       Relation::eq, 0);
  return model;
}

LpModel noncritical_k_dual_model(int m, int k) {
  require(m >= 2 && k >= 1, "NonCriticalKDual: needs m >= 2, k >= 1");
  LpModel model("NonCriticalKDual(" + describe(ModelKind::noncritical_k_dual, {m, k}) + ")",
                Sense::maximize);
  for (int i = 1; i <= 4; ++i) model.add_variable(lam(i), VarSign::nonpos);
  model.add_variable(lam(5), VarSign::free);
  model.add_variable(lam(6), VarSign::free);
  model.set_objective({{lam(6), 1}});
  const Rational inv_k = frac(1, k);
  model.add_constraint("col[opt]", {{lam(1), -m}, {lam(2), 1}, {lam(5), inv_k}, {lam(6), inv_k}},
                       Relation::le, 1);
  model.add_constraint("col[sum_p]", {{lam(1), 1}, {lam(5), -1}}, Relation::le, 0);
  model.add_constraint("col[sl]", {{lam(2), -k}, {lam(5), -1}, {lam(6), -1}}, Relation::le, 0);
  model.add_constraint("col[t_prime]", {{lam(2), -1}, {lam(3), -1}, {lam(5), 1}}, Relation::le, 0);
  model.add_constraint("col[t_c]", {{lam(3), 1}, {lam(4), m - 2}, {lam(5), 1}, {lam(6), 1}},
                       Relation::le, 0);
  model.add_constraint("col[t_second]", {{lam(4), -1}, {lam(5), 1}}, Relation::le, 0);
  return model;
}

LpModel slack76_model(int m) {
  require(m >= 3, "Slack76: needs m >= 3");
  LpModel model("Slack76(m=" + std::to_string(m) + ")", Sense::maximize);
  const int jobs[] = {1, m - 1, m, m + 1, 2 * m - 1, 2 * m, 2 * m + 1};
  for (int j : jobs) model.add_variable(p(j));
  model.set_objective({{p(2 * m + 1), 1}, {p(m), 1}, {p(2 * m), 1}});
  model.add_constraint("opt_two_largest", {{p(m - 1), 1}, {p(m), 1}}, Relation::le, 1);
  model.add_constraint("opt_three_smallest", {{p(2 * m - 1), 1}, {p(2 * m), 1}, {p(2 * m + 1), 1}},
                       Relation::le, 1);
  model.add_constraint("case_condition", {{p(2 * m + 1), 1}, {p(1), -1}, {p(m), 1}}, Relation::ge, 0);
  for (std::size_t i = 0; i + 1 < std::size(jobs); ++i) {
    model.add_constraint("sorted" + std::to_string(i + 1), {{p(jobs[i]), 1}, {p(jobs[i + 1]), -1}},
                         Relation::ge, 0);
  }
  return model;
}

LpModel case1_not_m1_model(int m) {
  return two_m_plus_one("Case1NotM1(m=" + std::to_string(m) + ")", m, false);
}

LpModel case1_not_m1_dual_model(int m) {
  return two_m_plus_one_dual("Case1NotM1Dual(m=" + std::to_string(m) + ")", m, false);
}

LpModel case2_model(int m) { return two_m_plus_one("Case2(m=" + std::to_string(m) + ")", m, true); }

LpModel case2_dual_model(int m) {
  return two_m_plus_one_dual("Case2Dual(m=" + std::to_string(m) + ")", m, true);
}

LpModel appendix_a_model(int m) {
  require(m >= 2, "AppendixA: needs m >= 2");
  const int n = 3 * m;
  LpModel model("AppendixA(m=" + std::to_string(m) + ")", Sense::minimize);
  for (int j = 1; j <= n; ++j) model.add_variable(p(j));
  model.add_variable("opt");
  model.set_objective({{"opt", 1}});
  Terms all;
  for (int j = 1; j <= n; ++j) all.emplace_back(p(j), 1);
  all.emplace_back("opt", -m);
  model.add_constraint("avg_bound", all, Relation::le, 0);
  model.add_constraint("three_jobs_bound", {{p(1), 1}, {p(n - 1), 1}, {p(n), 1}, {"opt", -1}},
                       Relation::le, 0);
  model.add_constraint("p1_below_twice_pn", {{p(1), 1}, {p(n), -2}}, Relation::le, 0);
  model.add_constraint("heuristic_one", {{p(1), 1}, {p(m + 1), 1}, {p(n), 1}}, Relation::ge, 1);
  add_sorted(model, n);
  return model;
}

LpModel appendix_b_model(int m, int n, AppendixBCase subcase) {
  require(n >= 2 * m + 2 && n <= 3 * m - 1, "AppendixB: needs 2m+2 <= n <= 3m-1");
  switch (subcase) {
    case AppendixBCase::backbone:
      break;
    case AppendixBCase::first_three_on_two:
    case AppendixBCase::first_three_on_three:
      require(m == 4 && (n == 10 || n == 11), "AppendixB: first-three sub-cases need m=4, n in {10,11}");
      break;
    case AppendixBCase::tprime_p1_p6:
    case AppendixBCase::tprime_p2_p5:
    case AppendixBCase::tprime_p3_p4:
      require(m == 3 && n == 8, "AppendixB: t' sub-cases need m=3, n=8");
      break;
  }

  LpModel model("AppendixB(" + describe(ModelKind::appendix_b, {m, 0, n, subcase}) + ")",
                Sense::minimize);
  for (int j = 1; j <= n; ++j) model.add_variable(p(j));
  for (const char* v : {"t_c", "t_prime", "t_second", "p_prime", "opt"}) model.add_variable(v);
  model.set_objective({{"opt", 1}});

  Terms avg;
  for (int j = 1; j <= n; ++j) avg.emplace_back(p(j), 1);
  avg.emplace_back("opt", -m);
  model.add_constraint("avg_bound", avg, Relation::le, 0);
  Terms sum{{"t_c", 1}, {p(n), 1}, {"t_prime", 1}, {"p_prime", 1}, {"t_second", 1}};
  for (int j = 1; j <= n; ++j) sum.emplace_back(p(j), -1);
  model.add_constraint("sum_def", sum, Relation::eq, 0);
  model.add_constraint("tc_below_target", {{"t_c", 1}, {"t_prime", -1}, {"p_prime", -1}},
                       Relation::le, 0);
  model.add_constraint("others_above_tc", {{"t_c", m - 2}, {"t_second", -1}}, Relation::le, 0);
  model.add_constraint("heuristic_one", {{"t_c", 1}, {p(n), 1}}, Relation::eq, 1);
  model.add_constraint("pprime_above", {{p(n - 1), 1}, {"p_prime", -1}}, Relation::le, 0);
  model.add_constraint("tprime_above", {{p(m), 1}, {p(n - 2), 1}, {"t_prime", -1}}, Relation::le, 0);
  model.add_constraint("tc_below_pair", {{"t_c", 1}, {p(1), -1}, {p(m + 1), -1}}, Relation::le, 0);
  add_sorted(model, n);

  // opt >= (sum of listed jobs) / divisor
  auto opt_at_least = [&](const std::string& name, std::initializer_list<int> jobs, int divisor) {
    Terms t{{"opt", divisor}};
    for (int j : jobs) t.emplace_back(p(j), -1);
    model.add_constraint(name, t, Relation::ge, 0);
  };
  switch (subcase) {
    case AppendixBCase::backbone:
      break;
    case AppendixBCase::first_three_on_two:
      if (n == 11) {
        opt_at_least("first3_on_two", {1, 2, 3, 10, 11}, 2);
      } else {
        opt_at_least("first3_on_two", {1, 2, 3, 10}, 2);
      }
      break;
    case AppendixBCase::first_three_on_three:
      if (n == 11) {
        opt_at_least("first3_on_three", {1, 2, 3, 7, 8, 9, 10, 11}, 3);
      } else {
        opt_at_least("first3_on_three", {1, 2, 3, 7, 8, 9, 10}, 3);
      }
      break;
    case AppendixBCase::tprime_p1_p6:
    case AppendixBCase::tprime_p2_p5:
    case AppendixBCase::tprime_p3_p4: {
      opt_at_least("pair_bound", {1, 8}, 1);
      opt_at_least("five_on_two", {1, 2, 6, 7, 8}, 2);
      int a = 1;
      int b = 6;
      if (subcase == AppendixBCase::tprime_p2_p5) {
        a = 2;
        b = 5;
      } else if (subcase == AppendixBCase::tprime_p3_p4) {
        a = 3;
        b = 4;
      }
      model.add_constraint("tprime_assignment", {{"t_prime", 1}, {p(a), -1}, {p(b), -1}},
                           Relation::eq, 0);
      break;
    }
  }
  return model;
}

}  // namespace pcmax::lp
