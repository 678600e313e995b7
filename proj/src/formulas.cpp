#include "pcmax/formulas.hpp"

#include <stdexcept>
#include <string>

namespace pcmax {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("argument out of range: ") + what);
}

Rational frac(std::int64_t num, std::int64_t den) { return Rational(num) / Rational(den); }

}  // namespace

Rational graham_bound(int m) {
  require(m >= 1, "graham_bound needs m >= 1");
  return rk_bound(3, m);
}

Rational rk_bound(int k, int m) {
  require(k >= 1 && m >= 1, "rk_bound needs k >= 1, m >= 1");
  return frac(k + 1, k) - frac(1, std::int64_t{k} * m);
}

Rational r2_bound(int m) {
  require(m >= 2, "r2_bound needs m >= 2");
  return frac(4, 3) - frac(1, 3 * (std::int64_t{m} - 1));
}

Rational noncritical_k_bound(int k, int m) {
  require(k >= 1 && m >= k + 2, "noncritical_k_bound needs k >= 1, m >= k+2");
  return frac(k + 1, k) - frac(1, std::int64_t{k} * (m - 1));
}

Rational lpt_rev_bound(int m) {
  require(m >= 2, "lpt_rev_bound needs m >= 2");
  if (m == 2) return frac(9, 8);
  return r2_bound(m);
}

Rational other_jobs_bound(int m) {
  require(m >= 2, "other_jobs_bound needs m >= 2");
  const std::int64_t mm = m;
  return frac(4, 3) - frac(7 * mm - 4, 3 * (3 * mm * mm + mm - 1));
}

Rational case_bound_2m1(int m) {
  require(m >= 3, "case_bound_2m1 needs m >= 3");
  if (m == 3) return frac(15, 13);
  return frac(4, 3) - frac(1, 2 * std::int64_t{m} - 1);
}

Rational lpt_rev_lower_family_ratio(int m) {
  require(m >= 3, "lpt_rev_lower_family_ratio needs m >= 3");
  return frac(4 * std::int64_t{m} - 1, 3 * std::int64_t{m} + 1);
}

}  // namespace pcmax
