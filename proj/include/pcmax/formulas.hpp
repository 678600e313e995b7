#pragma once

#include "pcmax/rational.hpp"

// Closed-form approximation-ratio ceilings for LPT and LPT-REV. Every function
// returns an exact value and throws std::invalid_argument outside its range.

namespace pcmax {

/// Graham's LPT bound 4/3 - 1/(3m). m >= 1.
Rational graham_bound(int m);

/// A-posteriori bound (k+1)/k - 1/(km) for k jobs on the critical machine.
/// k >= 1, m >= 1.
Rational rk_bound(int k, int m);

/// 4/3 - 1/(3(m-1)): LPT with two jobs on the critical machine. m >= 2.
Rational r2_bound(int m);

/// (k+1)/k - 1/(k(m-1)) when a non-critical machine holds k jobs before the
/// critical one. k >= 1, m >= k+2.
Rational noncritical_k_bound(int k, int m);

/// LPT-REV guarantee: 4/3 - 1/(3(m-1)) for m >= 3, 9/8 for m = 2.
Rational lpt_rev_bound(int m);

/// 4/3 - (7m-4)/(3(3m^2+m-1)): LPT-REV when a job after the LPT critical job
/// becomes critical in one of the re-runs. m >= 2.
Rational other_jobs_bound(int m);

/// Ceiling for n = 2m+1 in the two sub-cases settled by LP: 15/13 for m = 3,
/// 4/3 - 1/(2m-1) for m >= 4.
Rational case_bound_2m1(int m);

/// (4m-1)/(3m+1), the ratio LPT-REV attains on the 2m+2 job family. m >= 3.
Rational lpt_rev_lower_family_ratio(int m);

}  // namespace pcmax
