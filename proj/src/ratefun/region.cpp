#include "tauberkit/region.hpp"

#include <cmath>

#include "tauberkit/errors.hpp"

namespace tauberkit {

std::string to_string(RegionKind kind) {
  switch (kind) {
    case RegionKind::right_of_curve: return "right-of-curve";
    case RegionKind::two_sided_curve: return "two-sided-curve";
    case RegionKind::fixed_strip: return "fixed-strip";
    case RegionKind::disc: return "disc";
  }
  return "unknown";
}

RegionSpec RegionSpec::omega(RateFunction m, double delta) {
  if (!(delta > 0.0)) throw PreconditionError("omega: delta must be positive");
  RegionSpec r;
  r.kind = RegionKind::right_of_curve;
  r.rate = std::move(m);
  r.delta = delta;
  return r;
}

RegionSpec RegionSpec::omega_prime(RateFunction m) {
  RegionSpec r;
  r.kind = RegionKind::two_sided_curve;
  r.rate = std::move(m);
  return r;
}

RegionSpec RegionSpec::strip(unsigned long k, double c) {
  if (k < 1) throw PreconditionError("strip: k must be a positive integer");
  if (!(c > 0.0)) throw PreconditionError("strip: c must be positive");
  RegionSpec r;
  r.kind = RegionKind::fixed_strip;
  r.k = k;
  r.c = c;
  return r;
}

RegionSpec RegionSpec::disc_of(double radius) {
  if (!(radius > 0.0)) throw PreconditionError("disc: radius must be positive");
  RegionSpec r;
  r.kind = RegionKind::disc;
  r.radius = radius;
  return r;
}

double RegionSpec::strip_half_width() const {
  return 1.0 / (c * std::log(static_cast<double>(k) + 1.0));
}

bool region_contains(const RegionSpec& region, std::complex<double> z) {
  const double re = z.real();
  const double im = std::abs(z.imag());
  switch (region.kind) {
    case RegionKind::right_of_curve:
      return re > -1.0 / (region.delta * region.rate->eval(im));
    case RegionKind::two_sided_curve:
      return std::abs(re) < 1.0 / region.rate->eval(im);
    case RegionKind::fixed_strip:
      return std::abs(re) < region.strip_half_width();
    case RegionKind::disc:
      return std::hypot(re, im) < region.radius;
  }
  return false;
}

}  // namespace tauberkit
