#include "pcmax/lp_battery.hpp"

#include <sstream>

#include "pcmax/certificates.hpp"

namespace pcmax::lp {
namespace {

Rational frac(std::int64_t num, std::int64_t den) { return Rational(num) / Rational(den); }

// Primal/dual kinds of the certified families.
struct Family {
  ModelKind primal;
  ModelKind dual;
};

BatteryLine verify(ModelKind kind, const ModelParams& params, const Family* family) {
  BatteryLine line;
  line.kind = kind;
  line.params = params;
  const LpModel model = build_model(kind, params);
  const SolveResult solved = simplex_solve(model);
  line.status = solved.status;
  line.expected = published_optimum(kind, params);
  if (solved.status != SolveStatus::optimal) return line;
  line.optimum = solved.objective;

  const SolveResult dual = simplex_solve(derive_dual(model));
  line.duality_gap = dual.status == SolveStatus::optimal ? solved.objective - dual.objective
                                                         : Rational(1);
  bool ok = dual.status == SolveStatus::optimal && line.duality_gap.is_zero();
  if (line.expected) ok = ok && *line.expected == line.optimum;

  if (family) {
    const PairReport pair =
        check_pair(build_model(family->primal, params), paper_certificate(family->primal, params),
                   build_model(family->dual, params), paper_certificate(family->dual, params));
    const bool pass = pair.ok() && pair.primal.objective == line.optimum;
    line.certificate = pass ? "pass" : "fail";
    ok = ok && pass;
  }
  line.ok = ok;
  return line;
}

}  // namespace

std::optional<Rational> published_optimum(ModelKind kind, const ModelParams& params) {
  const std::int64_t m = params.m;
  const std::int64_t k = params.k;
  switch (kind) {
    case ModelKind::noncritical_k:
    case ModelKind::noncritical_k_dual:
      if (k >= 1 && m >= k + 2) return frac(k * (m - 1), (k + 1) * m - k - 2);
      return std::nullopt;
    case ModelKind::slack76:
      return frac(7, 6);
    case ModelKind::case1_not_m1:
    case ModelKind::case1_not_m1_dual:
    case ModelKind::case2:
    case ModelKind::case2_dual:
      if (m == 3) return frac(15, 13);
      if (m >= 4) return frac(8 * m - 7, 3 * (2 * m - 1));
      return std::nullopt;
    case ModelKind::appendix_a:
      if (m == 2) return frac(8, 9);
      if (m == 3) return frac(6, 7);
      if (m == 4) return frac(16, 19);
      return std::nullopt;
    case ModelKind::appendix_b:
      switch (params.subcase) {
        case AppendixBCase::backbone: return std::nullopt;
        case AppendixBCase::first_three_on_two:
        case AppendixBCase::first_three_on_three: return frac(9, 11);
        case AppendixBCase::tprime_p1_p6: return frac(13, 15);
        case AppendixBCase::tprime_p2_p5:
        case AppendixBCase::tprime_p3_p4: return frac(6, 7);
      }
  }
  return std::nullopt;
}

std::string BatteryLine::to_string() const {
  std::ostringstream os;
  os << lp::to_string(kind) << ' ' << describe(kind, params) << " status=" << lp::to_string(status)
     << " optimum=" << optimum << " expected=" << (expected ? expected->to_string() : "-")
     << " certificate=" << certificate << " duality_gap=" << duality_gap << ' '
     << (ok ? "OK" : "MISMATCH");
  return os.str();
}

std::vector<BatteryLine> run_lp_battery(const BatteryOptions& options) {
  std::vector<BatteryLine> lines;
  for (int m = 2; m <= 4; ++m) lines.push_back(verify(ModelKind::appendix_a, {m}, nullptr));
  for (int m = 3; m <= 8; ++m) lines.push_back(verify(ModelKind::slack76, {m}, nullptr));

  const Family case1{ModelKind::case1_not_m1, ModelKind::case1_not_m1_dual};
  const Family case2{ModelKind::case2, ModelKind::case2_dual};
  for (const Family& f : {case1, case2}) {
    for (int m = 3; m <= options.certificate_m_max; ++m) {
      const Family* cert = m >= 4 ? &f : nullptr;
      lines.push_back(verify(f.primal, {m}, cert));
      lines.push_back(verify(f.dual, {m}, cert));
    }
  }

  using enum AppendixBCase;
  for (int n : {11, 10}) {
    lines.push_back(verify(ModelKind::appendix_b, {4, 0, n, first_three_on_two}, nullptr));
    lines.push_back(verify(ModelKind::appendix_b, {4, 0, n, first_three_on_three}, nullptr));
  }
  for (AppendixBCase c : {tprime_p1_p6, tprime_p2_p5, tprime_p3_p4}) {
    lines.push_back(verify(ModelKind::appendix_b, {3, 0, 8, c}, nullptr));
  }

  const Family noncritical{ModelKind::noncritical_k, ModelKind::noncritical_k_dual};
  for (int k = 1; k <= options.k_max; ++k) {
    for (int m = k + 2; m <= options.certificate_m_max; ++m) {
      lines.push_back(verify(ModelKind::noncritical_k, {m, k}, &noncritical));
      lines.push_back(verify(ModelKind::noncritical_k_dual, {m, k}, &noncritical));
    }
  }
  return lines;
}

}  // namespace pcmax::lp
