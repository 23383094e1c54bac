#include "tauberkit/inversion.hpp"

#include <cmath>
#include <sstream>

#include "tauberkit/errors.hpp"

namespace tauberkit {

namespace {

bool reaches(const RateFunction& f, double s, double t) {
  const double v = f.eval(s);
  if (std::isnan(v)) return f.eval_log(s) >= std::log(t);
  return v >= t;
}

}  // namespace

double right_inverse(const RateFunction& f, double t,
                     const InversionOptions& options) {
  if (!(t > 0.0)) throw PreconditionError("right_inverse: t must be positive");
  if (reaches(f, 0.0, t)) return 0.0;

  double lo = 0.0;
  double hi = 1.0;
  while (!reaches(f, hi, t)) {
    lo = hi;
    if (hi >= options.search_ceiling) {
      std::ostringstream msg;
      msg << "right_inverse: " << f.source() << " stays below " << t
          << " up to s = " << options.search_ceiling;
      throw UnboundedSearchError(msg.str());
    }
    hi = std::min(2.0 * hi, options.search_ceiling);
  }

  // Invariant: f(lo) < t <= f(hi).
  for (int iter = 0; iter < 4096 && hi - lo > options.relative_width * hi; ++iter) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (reaches(f, mid, t))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

double predicted_rate(const RateFunction& m, const RateFunction& k, double c,
                      double t, const InversionOptions& options) {
  if (!(c > 0.0 && c <= 1.0))
    throw PreconditionError("predicted_rate: c must lie in (0, 1]");
  if (!(t > 0.0)) throw PreconditionError("predicted_rate: t must be positive");
  const RateFunction mk = compose_mk(m, k);
  const double target = c * t;
  const double floor = mk.eval(0.0);
  if (target <= floor) {
    std::ostringstream msg;
    msg << "predicted_rate: c*t = " << target << " <= M_K(0) = " << floor
        << "; the inverse is 0 and the rate is undefined";
    throw DegenerateRateError(msg.str());
  }
  return 1.0 / right_inverse(mk, target, options);
}

}  // namespace tauberkit
