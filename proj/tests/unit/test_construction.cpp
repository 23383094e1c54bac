#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <cmath>
#include <complex>
#include <numbers>

#include "tauberkit/construction.hpp"
#include "tauberkit/derivatives.hpp"
#include "tauberkit/errors.hpp"
#include "tauberkit/fft_eval.hpp"
#include "tauberkit/log_complex.hpp"
#include "tauberkit/quadrature.hpp"

using namespace tauberkit;
using cplx = std::complex<double>;
namespace mp = boost::multiprecision;
using Big = mp::cpp_bin_float_50;
using BigC = mp::cpp_complex_50;

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Phi_m(s) in 50-digit complex arithmetic, straight from the closed forms.
BigC phi_big(int m, const BigC& s) {
  const BigC s2 = s * s;
  const BigC u = (s2 - 625) / (s2 + 1);
  const BigC sm = pow(s, m);
  const BigC g = sm / (pow(BigC(25), m) + sm);
  const BigC q = sm / (sm + 1);
  BigC h = q;
  for (int j = 0; j < m; ++j) h = h * h;
  return u * u * u * u * g * h / (s2 * s2 + 1);
}

double log_abs(const BigC& z) { return static_cast<double>(log(abs(z))); }

}  // namespace

TEST(Index, Examples) {
  EXPECT_EQ(index_for(8).m, 2);
  EXPECT_EQ(index_for(8).k_m, 8u);
  EXPECT_EQ(index_for(100).m, 6);
  EXPECT_EQ(index_for(100).k_m, 384u);
  EXPECT_EQ(index_for(64).m, 4);
  EXPECT_EQ(index_for(65).m, 6);
  EXPECT_EQ(k_of(2), 8u);
  EXPECT_THROW(require_even_order(3), PreconditionError);
  EXPECT_THROW(require_even_order(0), PreconditionError);
}

TEST(LogComplex, Basics) {
  EXPECT_NEAR(wrap_phase(3.0 * std::numbers::pi), std::numbers::pi, 1e-15);
  const auto a = LogComplex::from_complex({3.0, 4.0});
  EXPECT_NEAR(a.magnitude(), 5.0, 1e-15);
  const auto b = a * a.inverse();
  EXPECT_NEAR(b.log_mag, 0.0, 1e-15);
  EXPECT_NEAR(b.phase, 0.0, 1e-15);
  EXPECT_TRUE(LogComplex::from_complex(0.0).is_zero());
  EXPECT_NEAR(std::abs(log1p(cplx(1e-20, 1e-20)) - cplx(1e-20, 1e-20)), 0.0, 1e-35);
}

TEST(Factors, FExamples) {
  EXPECT_NEAR(f_factor_eval(0.0).magnitude(), 1.52587890625e11, 1e-3);
  EXPECT_EQ(f_factor_eval(25.0).log_mag, kNegInf);
  const Big f5 = pow(Big(600) / 26, 4);
  EXPECT_NEAR(f_factor_eval(5.0).magnitude() / static_cast<double>(f5), 1.0, 1e-14);
  EXPECT_THROW(f_factor_eval(cplx(0.0, 1.0 + 1e-9)), PoleError);
  try {
    f_factor_eval(cplx(0.0, -1.0));
  } catch (const PoleError& e) {
    EXPECT_EQ(e.factor(), "F");
  }
}

TEST(Factors, GExamples) {
  for (int m : {2, 4, 8, 20}) EXPECT_NEAR(g_eval(m, 25.0).magnitude(), 0.5, 1e-15);
  EXPECT_NEAR(g_eval(2, 5.0).magnitude(), 1.0 / 26.0, 1e-16);
  EXPECT_EQ(g_eval(2, 0.0).log_mag, kNegInf);
  EXPECT_THROW(g_eval(2, cplx(0.0, 25.0)), PoleError);
}

TEST(Factors, HExamples) {
  EXPECT_NEAR(h_eval(2, 1.0).magnitude(), 1.0 / 16.0, 1e-16);
  EXPECT_EQ(h_eval(4, 0.0).log_mag, kNegInf);
  double previous = 0.0;
  for (int m : {2, 4, 6, 8, 10}) {
    const double v = h_eval(m, 3.0).magnitude();
    EXPECT_GT(v, previous);
    EXPECT_LT(v, 1.0);
    previous = v;
  }
  EXPECT_THROW(h_eval(2, cplx(0.0, 1.0)), PoleError);
}

TEST(Factors, HLogDomainOracle) {
  using Big200 = mp::number<mp::cpp_bin_float<200>>;
  const Big200 three(3);
  const Big200 q = pow(three, 20) / (1 + pow(three, 20));
  const Big200 expected = ldexp(Big200(1), 20) * log(q);
  const double got = h_eval(20, 3.0).log_mag;
  EXPECT_NEAR(got / static_cast<double>(expected), 1.0, 1e-8);
}

TEST(Factors, QExamples) {
  EXPECT_NEAR(q_eval(2, 1.0).magnitude(), 0.5, 1e-16);
  const cplx z(7.0, 0.01);
  EXPECT_NEAR(g_eval(6, z).log_mag, q_eval(6, z / 25.0).log_mag, 1e-12);
  EXPECT_NEAR(q_eval(4, 1e6).log_mag, 0.0, 1e-15);
  EXPECT_LT(q_eval(4, 1e6).log_mag, 0.0);
}

TEST(Factors, PhiAndTransform) {
  for (double s : {0.3, 2.0, 24.0, 80.0}) {
    EXPECT_NEAR(phi_eval(4, s).log_mag, phi_eval(4, -s).log_mag, 1e-13);
    EXPECT_NEAR(RealProfile(4).log_value(s), phi_eval(4, s).log_mag, 1e-11);
  }
  EXPECT_EQ(phi_eval(2, 25.0).log_mag, kNegInf);
  EXPECT_NEAR(phi_eval(4, 30.0).log_mag, log_abs(phi_big(4, BigC(30))), 1e-12);

  const auto axis = transform_eval(2, cplx(0.0, 10.0));
  EXPECT_NEAR(axis.log_mag, phi_eval(2, 10.0).log_mag, 1e-13);

  const cplx lambda(0.01, 40.0);
  const BigC s = BigC(0, -1) * BigC(0.01, 40);
  const BigC expect = phi_big(6, s);
  const auto got = transform_eval(6, lambda);
  EXPECT_NEAR(got.log_mag, log_abs(expect), 1e-11);
  EXPECT_NEAR(got.phase, static_cast<double>(arg(expect)), 1e-11);
}

TEST(Factors, TransformDomain) {
  EXPECT_NEAR(transform_half_width(2), std::sin(std::numbers::pi / 4.0), 1e-16);
  EXPECT_NEAR(transform_half_width(8), std::sin(std::numbers::pi / 8.0), 1e-16);
  EXPECT_THROW(transform_eval(8, cplx(0.4, 1.0)), DomainError);
}

TEST(Factors, TransformVanishingBound) {
  // log|f^_2(lambda)| - 8 log|lambda| stays bounded on |lambda| < 1/3.
  double sup = kNegInf;
  for (double r = 1e-4; r < 1.0 / 3.0; r *= 1.5)
    sup = std::max(sup, transform_eval(2, cplx(r, 0.0)).log_mag - 8.0 * std::log(r));
  EXPECT_TRUE(std::isfinite(sup));
  EXPECT_LT(sup, 30.0);
}

TEST(Quadrature, ParityAndReality) {
  for (int m : {2, 4, 6})
    for (double t : {0.0, 1.0, 5.0, 20.0}) {
      const auto a = f_eval(m, t, 1e-10);
      const auto b = f_eval(m, -t, 1e-10);
      EXPECT_EQ(a.value.imag(), 0.0);
      EXPECT_NEAR(a.value.real(), b.value.real(), 1e-10);
    }
}

TEST(Quadrature, RegressionOracle) {
  // 30-digit adaptive quadrature of Phi_2 / pi on [0, inf).
  const double reference = 118371.270681208224590885955911;
  const auto r = f_eval(2, 0.0, 1e-10);
  EXPECT_NEAR(r.value.real(), reference, 1e-9);
  EXPECT_LE(r.abs_error_estimate, 0.5e-10);
  EXPECT_GT(r.nodes_used, 0u);
}

TEST(Quadrature, PositivityFloor) {
  for (int m : {2, 4, 6, 8}) {
    const double f0 = f_eval(m, 0.0, 1e-10).value.real();
    const double lm = tail_mass_eval(m, 25.0, 1e-10).value.real();
    EXPECT_GT(f0, 0.0);
    EXPECT_GE(f0, 0.5 * lm);
  }
}

TEST(Quadrature, DerivativeOddAndFiniteDifference) {
  for (int m : {2, 4}) EXPECT_NEAR(f_deriv_eval(m, 0.0, 1e-8).value.real(), 0.0, 1e-12);
  const double h = 1e-4;
  const double fd = (f_eval(2, 1.0 + h, 1e-10).value.real() -
                     f_eval(2, 1.0 - h, 1e-10).value.real()) / (2.0 * h);
  const double d = f_deriv_eval(2, 1.0, 1e-8).value.real();
  // The h^2 f'''/6 truncation of the quotient is about 3.5e-4 here.
  EXPECT_NEAR(fd, d, 1e-5 * std::abs(d));
}

TEST(Quadrature, Preconditions) {
  EXPECT_THROW(f_eval(2, 0.0, 1e-13), PreconditionError);
  EXPECT_THROW(f_eval(3, 0.0, 1e-8), PreconditionError);
  EXPECT_THROW(scale_sequence(0.5, 2, 1.0, 1e-8), PreconditionError);
  EXPECT_THROW(f_eval(2, 5.0, 1e-12, QuadratureOptions{1000}), ToleranceError);
}

TEST(Quadrature, ScaleSequence) {
  EXPECT_DOUBLE_EQ(scale_sequence(2.0, 4, 1.5, 1e-10), f_eval(4, 3.0, 1e-10).value.real());
}

TEST(Fft, AgreesWithQuadrature) {
  const FftGridParams params;
  const auto grid = fft_compatible_grid(50.0, 64, params);
  for (int m : {2, 4}) {
    const auto fft = f_eval_fft(m, grid, params);
    for (std::size_t i = 0; i < grid.count; i += 7)
      EXPECT_NEAR(fft[i].value.real(), f_eval(m, grid.at(i), 1e-10).value.real(), 1e-6);
  }
}

TEST(Fft, ZeroBinIsTrapezoidSum) {
  const FftGridParams params{64.0, 1u << 12};
  const auto r = f_eval_fft(4, UniformGrid{0.0, params.base_step(), 1}, params);
  const RealProfile phi(4);
  double sum = 0.0;
  for (std::size_t j = 0; j < params.points; ++j)
    sum += phi(-params.half_width + params.ds() * static_cast<double>(j));
  EXPECT_NEAR(r[0].value.real(), sum * params.ds() / (2.0 * std::numbers::pi), 1e-9);
  EXPECT_EQ(r[0].method, QuadratureMethod::fft_grid);
}

TEST(Fft, IncompatibleGridThrows) {
  const FftGridParams params;
  EXPECT_THROW(f_eval_fft(2, UniformGrid{0.0, 0.3, 4}, params), PreconditionError);
  EXPECT_THROW(f_eval_fft(2, UniformGrid{0.0, params.base_step(), params.points}, params),
               PreconditionError);
}

TEST(Derivatives, GPrimeMatchesClosedForm) {
  const int m = 4;
  const double s = 10.0;
  const double p = std::pow(25.0, m);
  const double expected = m * p * std::pow(s, m - 1) / std::pow(p + std::pow(s, m), 2);
  EXPECT_NEAR(g_jet(m, s).d1 / expected, 1.0, 1e-13);
}

TEST(Derivatives, FourthPowerZero) {
  EXPECT_EQ(f_factor_jet(25.0).d1, 0.0);
  EXPECT_EQ(f_factor_jet(25.0).value, 0.0);
}

TEST(Derivatives, JetsMatchValues) {
  for (double s : {0.5, 3.0, 24.0, 40.0}) {
    EXPECT_NEAR(g_jet(6, s).value / g_eval(6, s).magnitude(), 1.0, 1e-13);
    EXPECT_NEAR(h_jet(6, s).value / h_eval(6, s).magnitude(), 1.0, 1e-13);
    EXPECT_NEAR(f_factor_jet(s).value / f_factor_eval(s).magnitude(), 1.0, 1e-13);
  }
}

TEST(Derivatives, CmEstimate) {
  const auto grid = c_m_default_grid(4);
  const auto est = c_m_estimate(4, grid);
  EXPECT_TRUE(std::isfinite(est.value));
  EXPECT_GT(est.value, 0.0);
  EXPECT_EQ(est.checked_points, 10u);
  const std::vector<double> coarse = {0.0, 10.0, 20.0, 60.0};
  EXPECT_THROW(c_m_estimate(4, coarse), PreconditionError);
}

TEST(Derivatives, CmRefinementIsMonotone) {
  // Every point of the default grid lies in a grid with doubled density.
  std::vector<double> grid = c_m_default_grid(6);
  std::vector<double> dense = grid;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) dense.push_back(0.5 * (grid[i] + grid[i + 1]));
  EXPECT_GE(c_m_estimate(6, dense).value, c_m_estimate(6, grid).value);
}
