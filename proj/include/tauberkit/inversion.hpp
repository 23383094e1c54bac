#pragma once

#include "tauberkit/rate_function.hpp"

namespace tauberkit {

struct InversionOptions {
  double search_ceiling = 1e300;
  double relative_width = 1e-12;
};

/// Minimal right-inverse: the smallest s >= 0 with f(s) >= t, located by
/// doubling from s = 1 and then bisecting. Returns 0 when t <= f(0).
/// Throws UnboundedSearchError if f stays below t up to the search ceiling.
double right_inverse(const RateFunction& f, double t,
                     const InversionOptions& options = {});

/// 1 / M_K^{-1}(c t). Throws DegenerateRateError when c t <= M_K(0).
double predicted_rate(const RateFunction& m, const RateFunction& k, double c,
                      double t, const InversionOptions& options = {});

}  // namespace tauberkit
