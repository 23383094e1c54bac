#include "tauberkit/construction.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "tauberkit/errors.hpp"

namespace tauberkit {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
const double kLog25 = std::log(25.0);

// Distance from z to the nearest root of w^m = -scale^m, i.e. to the nearest
// point scale * exp(i pi (2j+1)/m).
double distance_to_root_family(int m, double scale, cplx z) {
  const double angle = std::arg(z);
  const double j = std::round((angle * m / kPi - 1.0) / 2.0);
  const double theta = kPi * (2.0 * j + 1.0) / m;
  return std::abs(z - std::polar(scale, theta));
}

[[noreturn]] void throw_pole(const char* factor, cplx z, const char* family) {
  std::ostringstream msg;
  msg << "evaluation at z = (" << z.real() << ", " << z.imag()
      << ") is within " << kPoleGuard << " of a pole (" << family << ")";
  throw PoleError(factor, msg.str());
}

// log Q_m(z) as a complex logarithm (imaginary part not wrapped).
cplx log_q(int m, cplx z) {
  const cplx log_z = std::log(z);
  if (std::abs(z) <= 1.0) {
    const cplx m_log_z = static_cast<double>(m) * log_z;
    return m_log_z - log1p(std::exp(m_log_z));
  }
  return -log1p(std::exp(-static_cast<double>(m) * log_z));
}

}  // namespace

std::uint64_t k_of(int m) {
  if (m < 1 || m > kMaxOrder) throw PreconditionError("k_of: m out of range");
  return static_cast<std::uint64_t>(m) << m;
}

ConstructionIndex index_for(std::uint64_t k) {
  if (k < 1) throw PreconditionError("index_for: k must be >= 1");
  for (int m = 2; m <= kMaxOrder; m += 2) {
    const std::uint64_t km = k_of(m);
    if (k <= km) return {k, m, km};
  }
  throw PreconditionError("index_for: k too large");
}

void require_even_order(int m) {
  if (m < 2 || m > kMaxOrder || m % 2 != 0) {
    std::ostringstream msg;
    msg << "construction order m must be an even integer in [2, " << kMaxOrder
        << "], got " << m;
    throw PreconditionError(msg.str());
  }
}

LogComplex f_factor_eval(cplx z) {
  const cplx i(0.0, 1.0);
  if (std::abs(z - i) < kPoleGuard || std::abs(z + i) < kPoleGuard)
    throw_pole("F", z, "z = +-i");
  const cplx num_a = z - 25.0;
  const cplx num_b = z + 25.0;
  if (num_a == 0.0 || num_b == 0.0) return LogComplex::zero();
  const cplx quotient = (num_a / (z - i)) * (num_b / (z + i));
  return LogComplex::from_complex(quotient).pow(4.0);
}

LogComplex g_eval(int m, cplx z) {
  require_even_order(m);
  if (distance_to_root_family(m, 25.0, z) < kPoleGuard)
    throw_pole("G_m", z, "zeros of 25^m + z^m");
  if (z == 0.0) return LogComplex::zero();
  const cplx m_log_z = static_cast<double>(m) * std::log(z);
  const cplx m_log_25(m * kLog25, 0.0);
  return LogComplex::from_log(m_log_z - log_add_exp(m_log_25, m_log_z));
}

LogComplex q_eval(int m, cplx z) {
  require_even_order(m);
  if (distance_to_root_family(m, 1.0, z) < kPoleGuard)
    throw_pole("Q_m", z, "zeros of 1 + z^m");
  if (z == 0.0) return LogComplex::zero();
  return LogComplex::from_log(log_q(m, z));
}

LogComplex h_eval(int m, cplx z) {
  require_even_order(m);
  if (distance_to_root_family(m, 1.0, z) < kPoleGuard)
    throw_pole("H_m", z, "zeros of 1 + z^m");
  if (z == 0.0) return LogComplex::zero();
  return LogComplex::from_log(std::ldexp(1.0, m) * log_q(m, z));
}

LogComplex phi_eval(int m, cplx s) {
  require_even_order(m);
  if (distance_to_root_family(4, 1.0, s) < kPoleGuard)
    throw_pole("1+s^4", s, "zeros of 1 + s^4");
  const LogComplex f = f_factor_eval(s);
  const LogComplex g = g_eval(m, s);
  const LogComplex h = h_eval(m, s);
  if (f.is_zero() || g.is_zero() || h.is_zero()) return LogComplex::zero();

  // 1 + s^4 as a product over its roots keeps precision near them.
  cplx log_denominator(0.0, 0.0);
  for (int j = 0; j < 4; ++j)
    log_denominator += std::log(s - std::polar(1.0, kPi * (2 * j + 1) / 4.0));
  return f * g * h / LogComplex::from_log(log_denominator);
}

double transform_half_width(int m) {
  require_even_order(m);
  return std::min(std::sin(kPi / m), std::sin(kPi / 4.0));
}

LogComplex transform_eval(int m, cplx lambda) {
  const double width = transform_half_width(m);
  if (!(std::abs(lambda.real()) < width - kPoleGuard)) {
    std::ostringstream msg;
    msg << "transform_eval: Re(lambda) = " << lambda.real()
        << " is outside the continuation strip |Re| < " << width
        << "; nearest pole family: "
        << (std::sin(kPi / m) < std::sin(kPi / 4.0) ? "zeros of 1 + s^m (H_m)"
                                                     : "zeros of 1 + s^4");
    throw DomainError(msg.str());
  }
  return phi_eval(m, cplx(0.0, -1.0) * lambda);
}

RealProfile::RealProfile(int m)
    : m_(m), two_pow_m_(std::ldexp(1.0, m)), m_log25_(m * kLog25) {
  require_even_order(m);
}

double RealProfile::log_value(double s) const noexcept {
  const double a = std::abs(s);
  if (a == 0.0 || a == 25.0) return kNegInf;
  const double log_a = std::log(a);
  const double log_f =
      4.0 * (std::log(std::abs(a - 25.0)) + std::log(a + 25.0) - std::log1p(a * a));
  const double m_log_a = m_ * log_a;
  const double log_g = m_log_a - (m_log_a > m_log25_
                                      ? m_log_a + std::log1p(std::exp(m_log25_ - m_log_a))
                                      : m_log25_ + std::log1p(std::exp(m_log_a - m_log25_)));
  const double log_h = a <= 1.0 ? two_pow_m_ * (m_log_a - std::log1p(std::exp(m_log_a)))
                                : -two_pow_m_ * std::log1p(std::exp(-m_log_a));
  const double log_w = a <= 1.0 ? std::log1p(a * a * a * a)
                                : 4.0 * log_a + std::log1p(1.0 / (a * a * a * a));
  return log_f + log_g + log_h - log_w;
}

double RealProfile::operator()(double s) const noexcept {
  return std::exp(log_value(s));
}

}  // namespace tauberkit
