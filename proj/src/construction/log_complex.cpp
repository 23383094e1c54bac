#include "tauberkit/log_complex.hpp"

#include <cmath>
#include <numbers>

namespace tauberkit {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}  // namespace

double wrap_phase(double angle) noexcept {
  if (!std::isfinite(angle)) return 0.0;
  double r = std::remainder(angle, kTwoPi);
  if (r <= -kPi) r += kTwoPi;
  return r;
}

std::complex<double> log1p(std::complex<double> w) noexcept {
  const double x = w.real();
  const double y = w.imag();
  // |1+w|^2 - 1 = 2x + x^2 + y^2
  const double re = 0.5 * std::log1p(2.0 * x + x * x + y * y);
  const double im = std::atan2(y, 1.0 + x);
  return {re, im};
}

std::complex<double> log_add_exp(std::complex<double> a,
                                 std::complex<double> b) noexcept {
  if (a.real() == kNegInf) return b;
  if (b.real() == kNegInf) return a;
  if (a.real() < b.real()) std::swap(a, b);
  return a + log1p(std::exp(b - a));
}

LogComplex LogComplex::from_complex(std::complex<double> z) noexcept {
  if (z == 0.0) return zero();
  return {std::log(std::abs(z)), std::arg(z)};
}

LogComplex LogComplex::from_log(std::complex<double> log_value) noexcept {
  if (log_value.real() == kNegInf) return zero();
  return {log_value.real(), wrap_phase(log_value.imag())};
}

bool LogComplex::is_zero() const noexcept { return log_mag == kNegInf; }

double LogComplex::magnitude() const noexcept { return std::exp(log_mag); }

std::complex<double> LogComplex::to_complex() const noexcept {
  if (is_zero()) return {0.0, 0.0};
  return std::polar(std::exp(log_mag), phase);
}

std::complex<double> LogComplex::log() const noexcept { return {log_mag, phase}; }

LogComplex LogComplex::pow(double exponent) const noexcept {
  if (is_zero()) return exponent == 0.0 ? one() : zero();
  return {log_mag * exponent, wrap_phase(phase * exponent)};
}

LogComplex LogComplex::conj() const noexcept {
  if (is_zero()) return zero();
  return {log_mag, wrap_phase(-phase)};
}

LogComplex LogComplex::inverse() const noexcept {
  return {-log_mag, wrap_phase(-phase)};
}

LogComplex operator*(const LogComplex& a, const LogComplex& b) noexcept {
  if (a.is_zero() || b.is_zero()) return LogComplex::zero();
  return {a.log_mag + b.log_mag, wrap_phase(a.phase + b.phase)};
}

LogComplex operator/(const LogComplex& a, const LogComplex& b) noexcept {
  if (a.is_zero()) return LogComplex::zero();
  return {a.log_mag - b.log_mag, wrap_phase(a.phase - b.phase)};
}

}  // namespace tauberkit
