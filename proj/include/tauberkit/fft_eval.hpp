#pragma once

#include <cstddef>
#include <vector>

#include "tauberkit/quadrature.hpp"

namespace tauberkit {

/// Discretization of Phi_m on [-S, S) with N equispaced samples.
/// The natural output spacing is 2 pi / (N ds) = pi / S.
struct FftGridParams {
  double half_width = 1024.0;
  std::size_t points = 1u << 17;

  double ds() const { return 2.0 * half_width / static_cast<double>(points); }
  double base_step() const;
  /// Output grid period; results are meaningful for |t| < period() / 2.
  double period() const;
};

struct UniformGrid {
  double start = 0.0;
  double step = 0.0;
  std::size_t count = 0;

  double at(std::size_t i) const { return start + step * static_cast<double>(i); }
};

/// f_m (derivative_order 0) or f_m' (derivative_order 1) on a uniform t grid
/// through one discrete Fourier transform of the sampled profile. The grid
/// start and step must be integer multiples of params.base_step() and every
/// node must lie inside half a period; otherwise PreconditionError.
/// abs_error_estimate is the difference to the half-resolution transform;
/// truncation_bound adds the s-tail bound and an aliasing estimate (largest
/// |f| near the edge of the output period).
std::vector<QuadratureResult> f_eval_fft(int m, const UniformGrid& t_grid,
                                         const FftGridParams& params = {},
                                         int derivative_order = 0);

/// The largest compatible grid {0, step, ..., (count-1) step} with
/// (count-1) step <= t_max, step a multiple of params.base_step().
UniformGrid fft_compatible_grid(double t_max, std::size_t count,
                                const FftGridParams& params = {});

}  // namespace tauberkit
