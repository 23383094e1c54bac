#pragma once

#include <complex>
#include <cstdint>

#include "tauberkit/log_complex.hpp"

namespace tauberkit {

/// Evaluations closer than this to a pole throw PoleError.
inline constexpr double kPoleGuard = 1e-8;

/// Largest even m accepted by the evaluators (k_m = m 2^m must fit in 64 bits).
inline constexpr int kMaxOrder = 56;

/// Links the full sequence index k to the even construction order m.
struct ConstructionIndex {
  std::uint64_t k = 0;
  int m = 0;
  std::uint64_t k_m = 0;
};

/// k_m = m 2^m (exact integer arithmetic).
std::uint64_t k_of(int m);

/// Smallest even m >= 2 with k <= m 2^m.
ConstructionIndex index_for(std::uint64_t k);

/// Throws PreconditionError unless m is even and 2 <= m <= kMaxOrder.
void require_even_order(int m);

/// F(z) = ((z^2 - 625) / (1 + z^2))^4. Poles at +-i.
LogComplex f_factor_eval(std::complex<double> z);

/// G_m(z) = z^m / (25^m + z^m), via m log z - logaddexp(m log 25, m log z).
LogComplex g_eval(int m, std::complex<double> z);

/// Q_m(z) = z^m / (1 + z^m). For |z| > 1 the form 1 / (1 + z^-m) is used.
LogComplex q_eval(int m, std::complex<double> z);

/// H_m(z) = z^(m 2^m) / (1 + z^m)^(2^m) = Q_m(z)^(2^m).
LogComplex h_eval(int m, std::complex<double> z);

/// Phi_m(s) = F(s) G_m(s) H_m(s) / (1 + s^4): the Fourier-side profile of f_m
/// and its analytic continuation.
LogComplex phi_eval(int m, std::complex<double> s);

/// Half-width of the pole-free vertical strip around the imaginary axis in
/// which the transform continues analytically: min(sin(pi/m), sin(pi/4)).
double transform_half_width(int m);

/// Laplace-type transform of f_m, continued off the imaginary axis:
/// f^_m(lambda) = Phi_m(-i lambda). Throws DomainError outside the strip.
LogComplex transform_eval(int m, std::complex<double> lambda);

/// Phi_m on the real axis as a plain double. Same value as phi_eval on real
/// arguments, but several times cheaper; used as the quadrature integrand.
class RealProfile {
 public:
  explicit RealProfile(int m);
  int order() const noexcept { return m_; }
  double operator()(double s) const noexcept;
  /// log Phi_m(|s|); -inf at the zeros s = 0 and s = +-25.
  double log_value(double s) const noexcept;

 private:
  int m_;
  double two_pow_m_;
  double m_log25_;
};

}  // namespace tauberkit
