#pragma once

#include <span>

#include "tauberkit/rate_function.hpp"
#include "tauberkit/report.hpp"

namespace tauberkit {

/// Regular growth: M(s) >= c M(s + c/M(s)) at every grid point, with relative
/// slack 1e-10. The extremum is the worst ratio c M(s + c/M(s)) / M(s).
VerificationReport regular_growth_check(const RateFunction& m, double c,
                                        const GridAxis& s_grid);
VerificationReport regular_growth_check(const RateFunction& m, double c,
                                        std::span<const double> s_grid);

/// Double-exponential ceiling on K: compares log log K(s) with
/// (1-eps) log(s M(s)). Points with K(s) <= 1 or s M(s) <= 0 are skipped and
/// listed in the notes. The extremum is the fitted constant sup(difference).
VerificationReport condition_13_check(const RateFunction& m, const RateFunction& k,
                                      double eps, const GridAxis& s_grid);
VerificationReport condition_13_check(const RateFunction& m, const RateFunction& k,
                                      double eps, std::span<const double> s_grid);

/// f(s) = O(e^{alpha s}): log f(s) - alpha s bounded above on the grid. The
/// extremum is the supremum, i.e. the log of the implied constant.
VerificationReport exp_growth_check(const RateFunction& f, double alpha,
                                    const GridAxis& s_grid);
VerificationReport exp_growth_check(const RateFunction& f, double alpha,
                                    std::span<const double> s_grid);

/// Finite-grid proxy for "bounded above": the supremum over the last quarter
/// of the sequence does not exceed the supremum over the rest (plus a 1e-10
/// relative slack). Needs at least two values.
struct BoundednessVerdict {
  double head_sup = 0.0;
  double tail_sup = 0.0;
  double sup = 0.0;
  bool bounded = false;
};
BoundednessVerdict bounded_above(std::span<const double> values);

}  // namespace tauberkit
