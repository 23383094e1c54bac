#include "tauberkit/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <sstream>
#include <vector>

#include "tauberkit/construction.hpp"
#include "tauberkit/errors.hpp"

namespace tauberkit {

namespace {

constexpr double kPi = std::numbers::pi;

// Kronrod abscissae (descending, centre last) and weights; Gauss weights pair
// with the odd-indexed abscissae and the centre.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double error = 0.0;
};

Panel gauss_kronrod15(const std::function<double(double)>& g, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = g(centre);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double sum = g(centre - dx) + g(centre + dx);
    kronrod += kWgk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

struct ByError {
  bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

void require_tolerance(double tol, const char* who) {
  if (!(tol >= kMinTolerance)) {
    std::ostringstream msg;
    msg << who << ": tol must be >= " << kMinTolerance;
    throw PreconditionError(msg.str());
  }
}

std::vector<double> profile_breakpoints(int m, double upper) {
  const double w = 1.0 / std::sqrt(static_cast<double>(m));
  std::vector<double> pts = {0.0, 5.0, 25.0 * (1.0 - w), 25.0, 25.0 * (1.0 + w)};
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (upper > pts.back()) pts.push_back(upper);
  return pts;
}

double quarter_period(double t) { return kPi / (2.0 * (1.0 + std::abs(t))); }

[[noreturn]] void throw_not_met(const char* who, int m, double t,
                                const PanelIntegral& r, double budget) {
  std::ostringstream msg;
  msg << who << "(m=" << m << ", t=" << t << "): error estimate " << r.error
      << " exceeds " << budget << " after " << r.nodes << " nodes";
  throw ToleranceError(msg.str());
}

}  // namespace

std::string to_string(QuadratureMethod method) {
  return method == QuadratureMethod::adaptive_panel ? "adaptive-panel" : "fft-grid";
}

nlohmann::ordered_json QuadratureResult::to_json() const {
  nlohmann::ordered_json j;
  j["value"] = {value.real(), value.imag()};
  j["abs_error_estimate"] = abs_error_estimate;
  j["truncation_bound"] = truncation_bound;
  j["nodes"] = nodes_used;
  j["method"] = to_string(method);
  return j;
}

PanelIntegral integrate_panels(const std::function<double(double)>& integrand,
                               std::span<const double> breakpoints, double max_width,
                               double tol, std::size_t max_nodes) {
  if (breakpoints.size() < 2) throw PreconditionError("integrate_panels: need >= 2 breakpoints");
  if (!(max_width > 0.0)) throw PreconditionError("integrate_panels: max_width must be positive");

  std::priority_queue<Panel, std::vector<Panel>, ByError> open;
  std::vector<Panel> closed;
  PanelIntegral out;
  double total_error = 0.0;

  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const double a = breakpoints[i];
    const double b = breakpoints[i + 1];
    if (!(b > a)) continue;
    const auto n = static_cast<std::size_t>(std::ceil((b - a) / max_width));
    const double h = (b - a) / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double lo = a + h * static_cast<double>(j);
      const double hi = j + 1 == n ? b : lo + h;
      Panel p = gauss_kronrod15(integrand, lo, hi);
      out.nodes += 15;
      total_error += p.error;
      open.push(p);
    }
  }

  while (total_error > tol && !open.empty() && out.nodes + 30 <= max_nodes) {
    Panel worst = open.top();
    open.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      closed.push_back(worst);
      continue;
    }
    Panel left = gauss_kronrod15(integrand, worst.a, mid);
    Panel right = gauss_kronrod15(integrand, mid, worst.b);
    out.nodes += 30;
    total_error += left.error + right.error - worst.error;
    open.push(left);
    open.push(right);
  }

  while (!open.empty()) {
    closed.push_back(open.top());
    open.pop();
  }
  std::sort(closed.begin(), closed.end(),
            [](const Panel& x, const Panel& y) { return x.a < y.a; });
  out.error = 0.0;
  for (const Panel& p : closed) {
    out.value += p.value;
    out.error += p.error;
  }
  out.converged = out.error <= tol;
  return out;
}

double f_truncation_point(int m, double tol) {
  const double w = 1.0 / std::sqrt(static_cast<double>(m));
  return std::max(25.0 * (1.0 + w) + 1.0, std::cbrt(2.0 / (3.0 * tol)));
}

double f_deriv_truncation_point(int m, double tol) {
  const double w = 1.0 / std::sqrt(static_cast<double>(m));
  return std::max(25.0 * (1.0 + w) + 1.0, std::sqrt(1.0 / tol));
}

QuadratureResult f_eval(int m, double t, double tol, const QuadratureOptions& options) {
  require_tolerance(tol, "f_eval");
  const RealProfile phi(m);
  const double upper = f_truncation_point(m, tol);
  const auto breaks = profile_breakpoints(m, upper);
  const auto r = integrate_panels(
      [&](double s) { return std::cos(t * s) * phi(s); }, breaks, quarter_period(t),
      0.5 * tol * kPi, options.max_nodes);
  if (!r.converged) throw_not_met("f_eval", m, t, r, 0.5 * tol);

  QuadratureResult out;
  out.value = {r.value / kPi, 0.0};
  out.abs_error_estimate = r.error / kPi;
  out.truncation_bound = 1.0 / (3.0 * kPi * upper * upper * upper);
  out.nodes_used = r.nodes;
  return out;
}

QuadratureResult f_deriv_eval(int m, double t, double tol, const QuadratureOptions& options) {
  require_tolerance(tol, "f_deriv_eval");
  const RealProfile phi(m);
  const double upper = f_deriv_truncation_point(m, tol);
  const auto breaks = profile_breakpoints(m, upper);
  const auto r = integrate_panels(
      [&](double s) { return s * std::sin(t * s) * phi(s); }, breaks, quarter_period(t),
      0.5 * tol * kPi, options.max_nodes);
  if (!r.converged) throw_not_met("f_deriv_eval", m, t, r, 0.5 * tol);

  QuadratureResult out;
  out.value = {-r.value / kPi, 0.0};
  out.abs_error_estimate = r.error / kPi;
  out.truncation_bound = 1.0 / (2.0 * kPi * upper * upper);
  out.nodes_used = r.nodes;
  return out;
}

QuadratureResult tail_mass_eval(int m, double s_min, double tol,
                                const QuadratureOptions& options) {
  require_tolerance(tol, "tail_mass_eval");
  if (!(s_min >= 25.0)) throw PreconditionError("tail_mass_eval: s_min must be >= 25");
  const RealProfile phi(m);
  const double upper = std::max(s_min + 1.0, std::cbrt(2.0 / (3.0 * tol)));
  std::vector<double> breaks = {s_min};
  const double w = 1.0 / std::sqrt(static_cast<double>(m));
  if (25.0 * (1.0 + w) > s_min) breaks.push_back(25.0 * (1.0 + w));
  breaks.push_back(upper);
  const auto r = integrate_panels(phi, breaks, quarter_period(0.0), 0.5 * tol * kPi,
                                  options.max_nodes);
  if (!r.converged) throw_not_met("tail_mass_eval", m, 0.0, r, 0.5 * tol);

  QuadratureResult out;
  out.value = {r.value / kPi, 0.0};
  out.abs_error_estimate = r.error / kPi;
  out.truncation_bound = 1.0 / (3.0 * kPi * upper * upper * upper);
  out.nodes_used = r.nodes;
  return out;
}

double scale_sequence(double alpha, int m, double t, double tol,
                      const QuadratureOptions& options) {
  if (!(alpha >= 1.0)) throw PreconditionError("scale_sequence: alpha must be >= 1");
  return f_eval(m, alpha * t, tol, options).value.real();
}

}  // namespace tauberkit
