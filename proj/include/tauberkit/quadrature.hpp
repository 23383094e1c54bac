#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <string>

#include "json.hpp"

namespace tauberkit {

enum class QuadratureMethod { adaptive_panel, fft_grid };

std::string to_string(QuadratureMethod method);

struct QuadratureResult {
  std::complex<double> value;
  double abs_error_estimate = 0.0;
  double truncation_bound = 0.0;
  std::size_t nodes_used = 0;
  QuadratureMethod method = QuadratureMethod::adaptive_panel;

  nlohmann::ordered_json to_json() const;
};

struct QuadratureOptions {
  /// Integrand evaluations allowed before giving up with ToleranceError.
  std::size_t max_nodes = 8'000'000;
};

/// Smallest accepted tolerance for the f_m evaluators.
inline constexpr double kMinTolerance = 1e-12;

/// Adaptive Gauss-Kronrod (7/15) integration of a real integrand over
/// [breakpoints.front(), breakpoints.back()]. Panels start no wider than
/// max_width and never straddle a breakpoint; the panel with the largest
/// |K15 - G7| is bisected until the summed estimate is <= tol. Panel values
/// are summed left to right, so results are reproducible.
struct PanelIntegral {
  double value = 0.0;
  double error = 0.0;
  std::size_t nodes = 0;
  bool converged = false;
};
PanelIntegral integrate_panels(const std::function<double(double)>& integrand,
                               std::span<const double> breakpoints, double max_width,
                               double tol, std::size_t max_nodes);

/// f_m(t) = (1/2pi) int e^{its} Phi_m(s) ds, evaluated as
/// (1/pi) int_0^S cos(ts) Phi_m(s) ds. S is chosen so the s^-4 tail bound is
/// below tol/2; panels span at most a quarter period and break at
/// 5, 25(1 - m^-1/2), 25, 25(1 + m^-1/2). Throws ToleranceError if the
/// error estimate exceeds tol/2 within the node budget.
QuadratureResult f_eval(int m, double t, double tol, const QuadratureOptions& options = {});

/// f_m'(t) = -(1/pi) int_0^S s sin(ts) Phi_m(s) ds; the tail decays like s^-3.
QuadratureResult f_deriv_eval(int m, double t, double tol,
                              const QuadratureOptions& options = {});

/// L_m = (1/2pi) int_{|s| >= s_min} Phi_m(s) ds, with the same engine.
QuadratureResult tail_mass_eval(int m, double s_min, double tol,
                                const QuadratureOptions& options = {});

/// The rescaled sequence t -> f_m(alpha t), alpha >= 1. Rescaling shrinks the
/// strip constant of the transform bound from c to c / alpha.
double scale_sequence(double alpha, int m, double t, double tol,
                      const QuadratureOptions& options = {});

/// Truncation point S with B / (3 S^3) <= tol / 2 (B = 1 bounds |F G_m H_m|
/// beyond s = 25), never below the last breakpoint.
double f_truncation_point(int m, double tol);
/// Same for the s^-3 tail of f_m': B / (2 S^2) <= tol / 2.
double f_deriv_truncation_point(int m, double tol);

}  // namespace tauberkit
