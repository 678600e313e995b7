#include "pcmax/certificates.hpp"

#include <map>
#include <stdexcept>

namespace pcmax::lp {
namespace {

std::string p(int j) { return "p[" + std::to_string(j) + "]"; }
std::string lam(int i) { return "lambda[" + std::to_string(i) + "]"; }

Rational frac(std::int64_t num, std::int64_t den) { return Rational(num) / Rational(den); }

// Lays a by-name assignment out in the model's column order; unnamed
// columns are zero.
Certificate assemble(const LpModel& model, CertificateRole role,
                     const std::map<std::string, Rational>& named, const Rational& objective) {
  Certificate c{model.id(), role, std::vector<Rational>(model.num_variables()), objective};
  for (const auto& [name, value] : named) c.values[model.column(name)] = value;
  return c;
}

Certificate noncritical_k_pair(int m, int k, bool dual) {
  if (k < 1 || m < k + 2) throw std::invalid_argument("NonCriticalK certificate needs k >= 1, m >= k+2");
  const std::int64_t mm = m;
  const std::int64_t kk = k;
  const std::int64_t d = (kk + 1) * mm - kk - 2;
  const Rational opt = frac(kk * (mm - 1), d);
  if (!dual) {
    return assemble(noncritical_k_model(m, k), CertificateRole::primal,
                    {{"t_c", frac(kk * (mm - 1) - 1, d)},
                     {"p_n", frac(mm - 1, d)},
                     {"t_prime", frac(kk * (mm - 1), d)},
                     {"t_second", frac((mm - 2) * (kk * (mm - 1) - 1), d)},
                     {"opt", opt},
                     {"sum_p", frac(mm * (mm - 1) * kk, d)},
                     {"sl", 0}},
                    opt);
  }
  const Rational neg = frac(-kk, d);
  return assemble(noncritical_k_dual_model(m, k), CertificateRole::dual,
                  {{lam(1), neg}, {lam(2), neg}, {lam(3), 0}, {lam(4), neg}, {lam(5), neg}, {lam(6), opt}},
                  opt);
}

Certificate two_m_plus_one_primal(const LpModel& model, int m) {
  const std::int64_t mm = m;
  const std::int64_t q = 2 * mm - 1;
  std::map<std::string, Rational> named;
  named["y"] = frac(8 * mm - 7, 3 * q);
  named["alpha"] = frac(2 * (mm - 1), q);
  named[p(1)] = frac(5 * mm - 4, 3 * q);
  for (int j = 2; j <= m - 1; ++j) named[p(j)] = frac(4 * mm - 5, 3 * q);
  named[p(m)] = frac(mm - 1, q);
  named[p(m + 1)] = frac(mm - 1, q);
  for (int j = m + 2; j <= 2 * m + 1; ++j) named[p(j)] = frac(1, 3);
  return assemble(model, CertificateRole::primal, named, named["y"]);
}

Certificate two_m_plus_one_dual(const LpModel& model, int m, bool case_two) {
  const std::int64_t mm = m;
  const std::int64_t q = 2 * mm - 1;
  std::map<std::string, Rational> named;
  named[lam(1)] = frac(2, q);
  named[lam(2)] = frac(2 * mm - 7, 3 * q);
  named[lam(m + 2)] = frac(1, q);
  named[lam(2 * m + 1)] = frac(2 * mm - 7, 3 * q);
  named[lam(2 * m + 2)] = frac(4 * (mm - 2), 3 * q);
  for (int i = 2 * m + 4; i <= 3 * m + 1; ++i) named[lam(i)] = frac(-2, q);
  if (case_two) {
    named[lam(3 * m + 2)] = frac(-3, q);
    named[lam(3 * m + 3)] = -1;
    named[lam(3 * m + 4)] = frac(2, q);
  } else {
    named[lam(3 * m + 2)] = frac(-1, q);
    named[lam(3 * m + 3)] = frac(3 - 2 * mm, q);
    named[lam(3 * m + 5)] = frac(-2, q);
  }
  const Rational objective = Rational(m) * named[lam(1)] + named[lam(2)];
  return assemble(model, CertificateRole::dual, named, objective);
}

}  // namespace

Certificate Certificate::perturbed(std::size_t index, const Rational& delta) const {
  Certificate c = *this;
  c.values.at(index) += delta;
  return c;
}

Certificate paper_certificate(ModelKind kind, const ModelParams& params) {
  const int m = params.m;
  auto need_m4 = [&](const char* what) {
    if (m < 4) throw std::invalid_argument(std::string(what) + " certificate needs m >= 4");
  };
  switch (kind) {
    case ModelKind::noncritical_k: return noncritical_k_pair(m, params.k, false);
    case ModelKind::noncritical_k_dual: return noncritical_k_pair(m, params.k, true);
    case ModelKind::case1_not_m1:
      need_m4("Case1NotM1");
      return two_m_plus_one_primal(case1_not_m1_model(m), m);
    case ModelKind::case1_not_m1_dual:
      need_m4("Case1NotM1Dual");
      return two_m_plus_one_dual(case1_not_m1_dual_model(m), m, false);
    case ModelKind::case2:
      need_m4("Case2");
      return two_m_plus_one_primal(case2_model(m), m);
    case ModelKind::case2_dual:
      need_m4("Case2Dual");
      return two_m_plus_one_dual(case2_dual_model(m), m, true);
    default:
      throw std::invalid_argument("no closed-form certificate for " + to_string(kind));
  }
}

CertificateReport check_certificate(const LpModel& model, const Certificate& certificate) {
  if (certificate.values.size() != model.num_variables()) {
    throw std::invalid_argument("certificate for " + certificate.model_id + " has " +
                                std::to_string(certificate.values.size()) + " values, model " +
                                model.id() + " has " + std::to_string(model.num_variables()));
  }
  CertificateReport report;
  const auto& x = certificate.values;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const auto& var = model.variables()[j];
    const bool bad = (var.sign == VarSign::nonneg && x[j].sign() < 0) ||
                     (var.sign == VarSign::nonpos && x[j].sign() > 0);
    if (bad) report.sign_violations.push_back(var.name + " = " + x[j].to_string());
  }
  for (const auto& c : model.constraints()) {
    Rational lhs;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (!c.coeffs[j].is_zero() && !x[j].is_zero()) lhs += c.coeffs[j] * x[j];
    }
    const bool ok = (c.relation == Relation::le && lhs <= c.rhs) ||
                    (c.relation == Relation::ge && lhs >= c.rhs) ||
                    (c.relation == Relation::eq && lhs == c.rhs);
    if (!ok) {
      report.violated_constraints.push_back(c.name + ": " + lhs.to_string() + " " +
                                            std::string(to_string(c.relation)) + " " +
                                            c.rhs.to_string());
    }
  }
  report.objective = model.objective_value(x);
  report.objective_matches = report.objective == certificate.claimed_objective;
  return report;
}

PairReport check_pair(const LpModel& primal_model, const Certificate& primal,
                      const LpModel& dual_model, const Certificate& dual) {
  PairReport r{check_certificate(primal_model, primal), check_certificate(dual_model, dual), {}};
  r.gap = r.primal.objective - r.dual.objective;
  return r;
}

}  // namespace pcmax::lp
