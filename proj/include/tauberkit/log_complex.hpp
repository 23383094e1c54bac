#pragma once

#include <complex>
#include <limits>

namespace tauberkit {

/// Wraps an angle into (-pi, pi].
double wrap_phase(double angle) noexcept;

/// log(1 + w) for complex w, accurate when |w| is small.
std::complex<double> log1p(std::complex<double> w) noexcept;

/// log(exp(a) + exp(b)); the imaginary part is only meaningful modulo 2*pi.
std::complex<double> log_add_exp(std::complex<double> a,
                                 std::complex<double> b) noexcept;

/// A complex number stored as (log |z|, arg z). Zero is log_mag = -inf.
/// Products and integer powers stay exact in the exponent, so values such as
/// s^(m 2^m) for m = 20 remain representable.
struct LogComplex {
  double log_mag = -std::numeric_limits<double>::infinity();
  double phase = 0.0;

  static LogComplex zero() noexcept { return {}; }
  static LogComplex one() noexcept { return {0.0, 0.0}; }
  static LogComplex from_complex(std::complex<double> z) noexcept;
  /// Interprets `log_value` as a complex logarithm: exp(log_value).
  static LogComplex from_log(std::complex<double> log_value) noexcept;

  bool is_zero() const noexcept;
  double magnitude() const noexcept;
  std::complex<double> to_complex() const noexcept;
  /// Complex logarithm with the stored phase as imaginary part.
  std::complex<double> log() const noexcept;

  LogComplex pow(double exponent) const noexcept;
  LogComplex conj() const noexcept;
  LogComplex inverse() const noexcept;

  friend LogComplex operator*(const LogComplex& a, const LogComplex& b) noexcept;
  friend LogComplex operator/(const LogComplex& a, const LogComplex& b) noexcept;
};

}  // namespace tauberkit
