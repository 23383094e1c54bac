#include "tauberkit/fft_eval.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>
#include <sstream>

#include "tauberkit/construction.hpp"
#include "tauberkit/errors.hpp"

namespace tauberkit {

namespace {

constexpr double kPi = std::numbers::pi;

// FFTW planning is not thread-safe.
std::mutex& planner_mutex() {
  static std::mutex mutex;
  return mutex;
}

class FftwBuffer {
 public:
  explicit FftwBuffer(std::size_t n)
      : data_(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n))), n_(n) {
    if (!data_) throw std::bad_alloc();
  }
  ~FftwBuffer() { fftw_free(data_); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;

  fftw_complex* get() { return data_; }
  std::complex<double>& operator[](std::size_t i) {
    return reinterpret_cast<std::complex<double>*>(data_)[i];
  }

  // In-place e^{+2 pi i jk/n} transform.
  void backward() {
    fftw_plan plan;
    {
      std::lock_guard lock(planner_mutex());
      plan = fftw_plan_dft_1d(static_cast<int>(n_), data_, data_, FFTW_BACKWARD,
                              FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }

 private:
  fftw_complex* data_;
  std::size_t n_;
};

// Samples x_j = w(s_j) Phi_m(s_j), s_j = -S + j ds (j < n), transformed.
// Entry k then holds sum_j x_j e^{2 pi i jk/n}.
void transform_profile(const RealProfile& phi, double half_width, std::size_t n,
                       int derivative_order, FftwBuffer& buf) {
  const double ds = 2.0 * half_width / static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double s = -half_width + ds * static_cast<double>(j);
    const double v = phi(s);
    buf[j] = derivative_order == 0 ? std::complex<double>(v, 0.0)
                                   : std::complex<double>(0.0, s * v);
  }
  buf.backward();
}

// Index of t = k base_step in an n-periodic output, or throws.
std::size_t output_index(double t, double base, std::size_t n) {
  const double q = t / base;
  const double k = std::round(q);
  if (std::abs(q - k) > 1e-9 * std::max(1.0, std::abs(q))) {
    std::ostringstream msg;
    msg << "f_eval_fft: t = " << t << " is not a multiple of the base step " << base;
    throw PreconditionError(msg.str());
  }
  if (!(std::abs(k) < static_cast<double>(n) / 2.0)) {
    std::ostringstream msg;
    msg << "f_eval_fft: t = " << t << " lies outside half the output period "
        << base * static_cast<double>(n) / 2.0;
    throw PreconditionError(msg.str());
  }
  const auto ki = static_cast<long long>(k);
  return static_cast<std::size_t>(ki >= 0 ? ki : ki + static_cast<long long>(n));
}

}  // namespace

double FftGridParams::base_step() const { return kPi / half_width; }

double FftGridParams::period() const { return base_step() * static_cast<double>(points); }

UniformGrid fft_compatible_grid(double t_max, std::size_t count, const FftGridParams& params) {
  if (count < 2 || !(t_max > 0.0))
    throw PreconditionError("fft_compatible_grid: need count >= 2 and t_max > 0");
  const double base = params.base_step();
  const auto stride = static_cast<std::size_t>(
      std::floor(t_max / (base * static_cast<double>(count - 1))));
  if (stride == 0) throw PreconditionError("fft_compatible_grid: grid finer than base step");
  return {0.0, base * static_cast<double>(stride), count};
}

std::vector<QuadratureResult> f_eval_fft(int m, const UniformGrid& t_grid,
                                         const FftGridParams& params, int derivative_order) {
  require_even_order(m);
  if (derivative_order != 0 && derivative_order != 1)
    throw PreconditionError("f_eval_fft: derivative_order must be 0 or 1");
  if (!(params.half_width >= 30.0) || params.points < 64 || params.points % 2 != 0)
    throw PreconditionError("f_eval_fft: need half_width >= 30 and an even point count >= 64");
  if (t_grid.count == 0) throw PreconditionError("f_eval_fft: empty t grid");

  const std::size_t n = params.points;
  const double base = params.base_step();
  const double ds = params.ds();
  const RealProfile phi(m);

  std::vector<std::size_t> index(t_grid.count);
  for (std::size_t i = 0; i < t_grid.count; ++i)
    index[i] = output_index(t_grid.at(i), base, n);

  FftwBuffer fine(n);
  transform_profile(phi, params.half_width, n, derivative_order, fine);
  // Every other sample: spacing 2 ds over the same interval, same base step.
  FftwBuffer coarse(n / 2);
  transform_profile(phi, params.half_width, n / 2, derivative_order, coarse);

  auto value_at = [&](FftwBuffer& buf, std::size_t k, double step) {
    // e^{i t_k s_0} with s_0 = -S and t_k S = k pi.
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    return buf[k] * sign * step / (2.0 * kPi);
  };

  // Aliasing: the largest |f| over the outer tenth of the period.
  double alias = 0.0;
  for (std::size_t k = n / 2 - n / 20; k <= n / 2 + n / 20 && k < n; ++k)
    alias = std::max(alias, std::abs(value_at(fine, k, ds)));

  const double s = params.half_width;
  const double tail = derivative_order == 0 ? 1.0 / (3.0 * kPi * s * s * s)
                                            : 1.0 / (2.0 * kPi * s * s);

  std::vector<QuadratureResult> out(t_grid.count);
  for (std::size_t i = 0; i < t_grid.count; ++i) {
    const std::size_t k = index[i];
    // Same t on the half-length transform: index k mod n/2 with sign from k.
    const long long signed_k = k < n / 2 ? static_cast<long long>(k)
                                         : static_cast<long long>(k) - static_cast<long long>(n);
    const std::size_t half = n / 2;
    const std::size_t kc = static_cast<std::size_t>(
        ((signed_k % static_cast<long long>(half)) + static_cast<long long>(half)) %
        static_cast<long long>(half));
    const double sign = (std::llabs(signed_k) % 2 == 0) ? 1.0 : -1.0;
    const std::complex<double> vf = fine[k] * sign * ds / (2.0 * kPi);
    const std::complex<double> vc = coarse[kc] * sign * (2.0 * ds) / (2.0 * kPi);

    QuadratureResult& r = out[i];
    r.value = vf;
    r.abs_error_estimate = std::abs(vf - vc);
    r.truncation_bound = tail + alias;
    r.nodes_used = n;
    r.method = QuadratureMethod::fft_grid;
  }
  return out;
}

}  // namespace tauberkit
