#pragma once

#include <complex>
#include <optional>
#include <string>

#include "tauberkit/rate_function.hpp"

namespace tauberkit {

enum class RegionKind {
  right_of_curve,   // Re z > -1 / (delta M(|Im z|))
  two_sided_curve,  // |Re z| < 1 / M(|Im z|)
  fixed_strip,      // |Re z| < 1 / (c log(k+1))
  disc,             // |z| < radius
};

std::string to_string(RegionKind kind);

/// A region of the complex plane. Every kind depends on Re z and |Im z| only,
/// so membership is invariant under conjugation. Build through the factories,
/// which validate parameters.
struct RegionSpec {
  RegionKind kind = RegionKind::disc;
  std::optional<RateFunction> rate;
  double c = 1.0;
  unsigned long k = 1;
  double radius = 1.0;
  /// Scale applied to the rate of a right-of-curve region (Omega_{delta M}).
  double delta = 1.0;

  static RegionSpec omega(RateFunction m, double delta = 1.0);
  static RegionSpec omega_prime(RateFunction m);
  static RegionSpec strip(unsigned long k, double c);
  static RegionSpec disc_of(double radius);

  /// Half-width of a fixed strip.
  double strip_half_width() const;
};

bool region_contains(const RegionSpec& region, std::complex<double> z);

}  // namespace tauberkit
