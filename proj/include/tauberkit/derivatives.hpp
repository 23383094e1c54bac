#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tauberkit {

/// Value and first two derivatives of a real factor at a point.
struct Jet {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;

  double operator[](int order) const { return order == 0 ? value : order == 1 ? d1 : d2; }
};

// Closed-form jets on s >= 0 (all three factors are even).
Jet f_factor_jet(double s);
Jet g_jet(int m, double s);
Jet h_jet(int m, double s);

struct CmEstimate {
  double value = 0.0;
  double argmax = 0.0;
  /// Derivative orders (j1, j2, j3) attaining the supremum.
  int orders[3] = {0, 0, 0};
  std::size_t grid_points = 0;
  std::size_t checked_points = 0;
  double worst_fd_relative_error = 0.0;
};

struct CmOptions {
  std::size_t fd_check_points = 10;
  std::uint64_t seed = 0x5eed'c0de;
  /// Relative tolerance, widened by the round-off floor of the difference quotient.
  double fd_relative_tolerance = 1e-6;
};

/// Grid supremum of max_{j1+j2+j3 <= 2} |F^(j1)| |G_m^(j2)| |H_m^(j3)|.
/// The grid must cover [0, S] with S >= 50 and have spacing at most
/// 1e-3 m^-1/2 inside 25(1 +- m^-1/2). The closed-form derivatives are
/// cross-checked against Richardson-extrapolated central differences at
/// randomly chosen grid points; a mismatch throws Error naming the point.
CmEstimate c_m_estimate(int m, std::span<const double> s_grid, const CmOptions& options = {});

/// Uniform spacing 1e-3 on [0, upper] merged with spacing 1e-3 m^-1/2 on the
/// band 25(1 +- m^-1/2).
std::vector<double> c_m_default_grid(int m, double upper = 100.0);

}  // namespace tauberkit
