#include "tauberkit/derivatives.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <sstream>

#include "tauberkit/construction.hpp"
#include "tauberkit/errors.hpp"

namespace tauberkit {

namespace {

// Q(x) = x^m / (1 + x^m) and 1 - Q, without cancellation.
struct QPair {
  double q;
  double one_minus_q;
};

QPair q_pair(int m, double x) {
  if (x <= 1.0) {
    const double xm = std::pow(x, m);
    return {xm / (1.0 + xm), 1.0 / (1.0 + xm)};
  }
  const double inv = std::pow(x, -m);
  return {1.0 / (1.0 + inv), inv / (1.0 + inv)};
}

constexpr std::array<std::array<int, 3>, 10> kOrderTriples = {{
    {0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, 0, 0},
    {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1},
}};

// Richardson-extrapolated central differences of order 1 and 2.
template <class Fn>
std::pair<double, double> finite_differences(const Fn& fn, double s, double h) {
  auto d1 = [&](double step) { return (fn(s + step) - fn(s - step)) / (2.0 * step); };
  auto d2 = [&](double step) {
    return (fn(s + step) - 2.0 * fn(s) + fn(s - step)) / (step * step);
  };
  return {(4.0 * d1(0.5 * h) - d1(h)) / 3.0, (4.0 * d2(0.5 * h) - d2(h)) / 3.0};
}

}  // namespace

Jet f_factor_jet(double s) {
  const double p = 1.0 + s * s;
  const double u = (s - 25.0) * (s + 25.0) / p;
  const double u1 = 1252.0 * s / (p * p);
  const double u2 = 1252.0 * (1.0 - 3.0 * s * s) / (p * p * p);
  const double u_sq = u * u;
  return {u_sq * u_sq, 4.0 * u_sq * u * u1, 12.0 * u_sq * u1 * u1 + 4.0 * u_sq * u * u2};
}

Jet g_jet(int m, double s) {
  require_even_order(m);
  s = std::abs(s);
  if (s == 0.0) return {0.0, 0.0, m == 2 ? 2.0 / 625.0 : 0.0};
  const auto [g, one_minus_g] = q_pair(m, s / 25.0);
  // G' = (m/s) G (1-G); G'' = (m/s) G' (1-2G) - (m/s^2) G (1-G)
  const double d1 = m / s * g * one_minus_g;
  const double d2 = m / s * d1 * (one_minus_g - g) - m / (s * s) * g * one_minus_g;
  return {g, d1, d2};
}

Jet h_jet(int m, double s) {
  require_even_order(m);
  s = std::abs(s);
  if (s == 0.0) return {0.0, 0.0, 0.0};
  const double two_m = std::ldexp(1.0, m);
  const double log_q = s <= 1.0 ? m * std::log(s) - std::log1p(std::pow(s, m))
                                : -std::log1p(std::pow(s, -m));
  const double h = std::exp(two_m * log_q);
  const auto [q, one_minus_q] = q_pair(m, s);
  // H' = a H with a = 2^m m (1-Q)/s; H'' = (a' + a^2) H.
  const double a = two_m * m * one_minus_q / s;
  const double a1 = -two_m * m * one_minus_q * (m * q + 1.0) / (s * s);
  return {h, a * h, (a1 + a * a) * h};
}

std::vector<double> c_m_default_grid(int m, double upper) {
  require_even_order(m);
  if (!(upper >= 50.0)) throw PreconditionError("c_m_default_grid: upper must be >= 50");
  const double w = 1.0 / std::sqrt(static_cast<double>(m));
  const double lo = 25.0 * (1.0 - w);
  const double hi = 25.0 * (1.0 + w);
  const double fine = 1e-3 * w;

  std::vector<double> grid;
  const auto n_base = static_cast<std::size_t>(std::ceil(upper / 1e-3));
  for (std::size_t i = 0; i <= n_base; ++i) grid.push_back(upper * i / n_base);
  const auto n_band = static_cast<std::size_t>(std::ceil((hi - lo) / fine));
  for (std::size_t i = 0; i <= n_band; ++i) grid.push_back(lo + (hi - lo) * i / n_band);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

CmEstimate c_m_estimate(int m, std::span<const double> s_grid, const CmOptions& options) {
  require_even_order(m);
  std::vector<double> grid(s_grid.begin(), s_grid.end());
  std::sort(grid.begin(), grid.end());
  if (grid.size() < 2 || grid.front() > 0.0 || grid.back() < 50.0)
    throw PreconditionError("c_m_estimate: grid must cover [0, S] with S >= 50");
  const double w = 1.0 / std::sqrt(static_cast<double>(m));
  const double band_lo = 25.0 * (1.0 - w);
  const double band_hi = 25.0 * (1.0 + w);
  const double max_gap = 1e-3 * w * (1.0 + 1e-9);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (grid[i] > band_lo && grid[i - 1] < band_hi && grid[i] - grid[i - 1] > max_gap) {
      std::ostringstream msg;
      msg << "c_m_estimate: spacing " << grid[i] - grid[i - 1] << " near s = " << grid[i]
          << " exceeds 1e-3 m^-1/2 inside the band 25(1 +- m^-1/2)";
      throw PreconditionError(msg.str());
    }
  }

  CmEstimate out;
  out.grid_points = grid.size();
  out.value = -1.0;
  for (double s : grid) {
    const Jet f = f_factor_jet(s);
    const Jet g = g_jet(m, s);
    const Jet h = h_jet(m, s);
    for (const auto& j : kOrderTriples) {
      const double v = std::abs(f[j[0]]) * std::abs(g[j[1]]) * std::abs(h[j[2]]);
      if (v > out.value) {
        out.value = v;
        out.argmax = s;
        std::copy(j.begin(), j.end(), out.orders);
      }
    }
  }

  // Cross-check the closed forms at pseudo-random interior grid points.
  std::vector<double> interior;
  for (double s : grid)
    if (s >= 0.05 && s <= grid.back() - 0.05) interior.push_back(s);
  std::mt19937_64 rng(options.seed);
  for (std::size_t n = 0; n < options.fd_check_points && !interior.empty(); ++n) {
    const double s = interior[rng() % interior.size()];
    struct Factor {
      const char* name;
      std::function<double(double)> value;
      Jet jet;
    };
    const Factor factors[3] = {
        {"F", [](double x) { return f_factor_jet(x).value; }, f_factor_jet(s)},
        {"G_m", [m](double x) { return g_jet(m, x).value; }, g_jet(m, s)},
        {"H_m", [m](double x) { return h_jet(m, x).value; }, h_jet(m, s)},
    };
    for (const auto& factor : factors) {
      const Jet& j = factor.jet;
      if (j.value == 0.0) continue;
      const double scale =
          std::abs(j.d1 / j.value) + std::sqrt(std::abs(j.d2 / j.value)) + 1.0 / s;
      const double h = std::min(1e-2 / scale, 1e-2);
      const auto [fd1, fd2] = finite_differences(factor.value, s, h);
      const double closed[2] = {j.d1, j.d2};
      const double numeric[2] = {fd1, fd2};
      for (int order = 0; order < 2; ++order) {
        if (std::abs(closed[order]) <= 1e-6) continue;
        // Round-off of a difference quotient of order j is about eps |value| / h^j.
        const double noise = 1e3 * std::numeric_limits<double>::epsilon() *
                             std::abs(j.value) / std::pow(h, order + 1);
        const double diff = std::abs(numeric[order] - closed[order]);
        const double rel = diff / std::abs(closed[order]);
        out.worst_fd_relative_error = std::max(out.worst_fd_relative_error, rel);
        if (diff > options.fd_relative_tolerance * std::abs(closed[order]) + noise) {
          std::ostringstream msg;
          msg << "c_m_estimate: derivative cross-check failed for " << factor.name
              << " (order " << order + 1 << ") at s = " << s << ", m = " << m
              << ": closed form " << closed[order] << " vs finite difference "
              << numeric[order];
          throw Error(msg.str());
        }
      }
    }
    ++out.checked_points;
  }
  return out;
}

}  // namespace tauberkit
