#include "tauberkit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>

#include "tauberkit/construction.hpp"
#include "tauberkit/derivatives.hpp"
#include "tauberkit/errors.hpp"
#include "tauberkit/growth_checks.hpp"
#include "tauberkit/inversion.hpp"
#include "tauberkit/parallel.hpp"
#include "tauberkit/quadrature.hpp"

namespace tauberkit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_m_list(std::span<const int> m_list, const char* who) {
  if (m_list.empty()) throw PreconditionError(std::string(who) + ": m_list must be nonempty");
  for (int m : m_list) require_even_order(m);
}

nlohmann::ordered_json m_json(std::span<const int> m_list) {
  return nlohmann::ordered_json(std::vector<int>(m_list.begin(), m_list.end()));
}

std::string fmt(double v) {
  std::ostringstream out;
  out << std::setprecision(6) << v;
  return out.str();
}

// max / min of positive values; inf if any is non-finite or non-positive.
double spread(std::span<const double> values) {
  double lo = kInf;
  double hi = 0.0;
  for (double v : values) {
    if (!std::isfinite(v) || !(v > 0.0)) return kInf;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return hi / lo;
}

// Half-line L^1 norm of |g| on [0, 1e4]; the s^-3 (or faster) tail is below 1e-12.
double half_line_norm(double (*g)(double)) {
  const double breaks[] = {0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 100.0, 1000.0, 10000.0};
  const auto r = integrate_panels([g](double s) { return std::abs(g(s)); }, breaks, 0.25,
                                  1e-12, 2'000'000);
  return r.value;
}

double w0(double s) { return 1.0 / (1.0 + s * s * s * s); }
double w0_d1(double s) {
  const double p = 1.0 + s * s * s * s;
  return -4.0 * s * s * s / (p * p);
}
double w0_d2(double s) {
  const double p = 1.0 + s * s * s * s;
  const double s2 = s * s;
  return (20.0 * s2 * s2 * s2 - 12.0 * s2) / (p * p * p);
}
double w1(double s) { return s / (1.0 + s * s * s * s); }
double w1_d1(double s) {
  const double s4 = s * s * s * s;
  return (1.0 - 3.0 * s4) / ((1.0 + s4) * (1.0 + s4));
}
double w1_d2(double s) {
  const double p = 1.0 + s * s * s * s;
  const double s3 = s * s * s;
  return (12.0 * s3 * s * s * s * s - 20.0 * s3) / (p * p * p);
}

double combine(double n0, double n1, double n2) {
  // Full-line norms are twice the half-line ones.
  return 2.0 * (10.0 * n0 + 6.0 * n1 + n2) / (2.0 * kPi);
}

VerificationReport failed_report(const std::string& id, const std::string& message) {
  VerificationReport r;
  r.property_id = id;
  r.extremum = std::numeric_limits<double>::quiet_NaN();
  r.pass = false;
  r.notes.push_back("error: " + message);
  return r;
}

template <class T>
void read(const nlohmann::json& j, const char* key, T& target) {
  if (j.contains(key)) target = j.at(key).get<T>();
}

GridAxis read_axis(const nlohmann::json& j, const GridAxis& fallback) {
  const std::string name = j.value("name", fallback.name);
  const std::string spacing = j.value("spacing", to_string(fallback.spacing));
  if (spacing == "explicit") {
    const auto pts = j.at("points").get<std::vector<double>>();
    return GridAxis::from_points(name, pts);
  }
  const double lo = j.value("min", fallback.min);
  const double hi = j.value("max", fallback.max);
  const auto count = j.value("count", fallback.count);
  if (spacing == "linear") return GridAxis::linear(name, lo, hi, count);
  if (spacing == "log") return GridAxis::log(name, lo, hi, count);
  throw PreconditionError("config: unknown grid spacing '" + spacing + "'");
}

nlohmann::ordered_json axis_json(const GridAxis& a) { return a.to_json(); }

}  // namespace

const DecayConstants& decay_constants() {
  static const DecayConstants constants = [] {
    DecayConstants c;
    c.a0 = combine(half_line_norm(w0), half_line_norm(w0_d1), half_line_norm(w0_d2));
    c.a1 = combine(half_line_norm(w1), half_line_norm(w1_d1), half_line_norm(w1_d2));
    return c;
  }();
  return constants;
}

VerifyConfig VerifyConfig::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("m_list"))
    throw PreconditionError("verify config must be an object naming at least m_list");
  VerifyConfig c;
  try {
    read(j, "m_list", c.m_list);
    read(j, "t_max", c.t_max);
    read(j, "tol", c.tol);
    if (j.contains("fft")) {
      read(j.at("fft"), "half_width", c.fft.half_width);
      read(j.at("fft"), "points", c.fft.points);
    }
    read(j, "norm_ratio_threshold", c.norm_ratio_threshold);
    read(j, "disc_radius", c.disc_radius);
    read(j, "n_radii", c.n_radii);
    read(j, "n_angles", c.n_angles);
    read(j, "slope_tolerance", c.slope_tolerance);
    read(j, "strip_c", c.strip_c);
    read(j, "im_max", c.im_max);
    read(j, "strip_n_re", c.strip_n_re);
    read(j, "strip_n_im", c.strip_n_im);
    read(j, "strip_ratio_threshold", c.strip_ratio_threshold);
    read(j, "q_m_list", c.q_m_list);
    read(j, "re_max", c.re_max);
    read(j, "q_n_re", c.q_n_re);
    read(j, "q_n_im", c.q_n_im);
    read(j, "q_threshold_max", c.q_threshold_max);
    read(j, "c_m_upper", c.c_m_upper);
    read(j, "c_m_ratio_threshold", c.c_m_ratio_threshold);
    read(j, "witness_m", c.witness_m);
    read(j, "witness_k", c.witness_k);
    read(j, "witness_eps", c.witness_eps);
    read(j, "witness_c", c.witness_c);
    read(j, "witness_t", c.witness_t);
    read(j, "witness_ratio_threshold", c.witness_ratio_threshold);
    read(j, "rate_m", c.rate_m);
    read(j, "rate_k", c.rate_k);
    read(j, "reg_c", c.reg_c);
    read(j, "cond_eps", c.cond_eps);
    read(j, "exp_alpha", c.exp_alpha);
    if (j.contains("reg_grid")) c.reg_grid = read_axis(j.at("reg_grid"), c.reg_grid);
    if (j.contains("cond_grid")) c.cond_grid = read_axis(j.at("cond_grid"), c.cond_grid);
    if (j.contains("exp_grid")) c.exp_grid = read_axis(j.at("exp_grid"), c.exp_grid);
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("verify config: ") + e.what());
  }
  if (c.m_list.empty()) throw PreconditionError("verify config: m_list must be nonempty");
  return c;
}

nlohmann::ordered_json VerifyConfig::to_json() const {
  nlohmann::ordered_json j;
  j["m_list"] = m_list;
  j["t_max"] = t_max;
  j["tol"] = tol;
  j["fft"] = {{"half_width", fft.half_width}, {"points", fft.points}};
  j["norm_ratio_threshold"] = norm_ratio_threshold;
  j["disc_radius"] = disc_radius;
  j["n_radii"] = n_radii;
  j["n_angles"] = n_angles;
  j["slope_tolerance"] = slope_tolerance;
  j["strip_c"] = strip_c;
  j["im_max"] = im_max;
  j["strip_n_re"] = strip_n_re;
  j["strip_n_im"] = strip_n_im;
  j["strip_ratio_threshold"] = strip_ratio_threshold;
  j["q_m_list"] = q_m_list;
  j["re_max"] = re_max;
  j["q_n_re"] = q_n_re;
  j["q_n_im"] = q_n_im;
  j["q_threshold_max"] = q_threshold_max;
  j["c_m_upper"] = c_m_upper;
  j["c_m_ratio_threshold"] = c_m_ratio_threshold;
  j["witness_m"] = witness_m;
  j["witness_k"] = witness_k;
  j["witness_eps"] = witness_eps;
  j["witness_c"] = witness_c;
  j["witness_t"] = witness_t;
  j["witness_ratio_threshold"] = witness_ratio_threshold;
  j["rate_m"] = rate_m;
  j["rate_k"] = rate_k;
  j["reg_c"] = reg_c;
  j["cond_eps"] = cond_eps;
  j["exp_alpha"] = exp_alpha;
  j["reg_grid"] = axis_json(reg_grid);
  j["cond_grid"] = axis_json(cond_grid);
  j["exp_grid"] = axis_json(exp_grid);
  return j;
}

VerificationReport verify_1a(std::span<const int> m_list, double t_max, double tol,
                             const FftGridParams& fft, double ratio_threshold) {
  require_m_list(m_list, "verify_1a");
  if (!(t_max >= 50.0)) throw PreconditionError("verify_1a: t_max must be >= 50");
  const double base = fft.base_step();
  const auto count = static_cast<std::size_t>(std::floor(t_max / base)) + 1;
  const UniformGrid grid{0.0, base, count};
  const double t_end = grid.at(count - 1);
  const DecayConstants& a = decay_constants();

  struct Norms {
    double sup0 = 0.0, l1_0 = 0.0, sup1 = 0.0, l1_1 = 0.0;
    double c_m = 0.0, tail0 = 0.0, tail1 = 0.0, pointwise0 = 0.0;
    double fft_error = 0.0, spot_diff = 0.0;
  };
  std::vector<Norms> norms(m_list.size());
  parallel_for(m_list.size(), [&](std::size_t i) {
    const int m = m_list[i];
    Norms& n = norms[i];
    n.c_m = c_m_estimate(m, c_m_default_grid(m)).value;
    const auto f = f_eval_fft(m, grid, fft, 0);
    const auto df = f_eval_fft(m, grid, fft, 1);
    double trap0 = 0.0;
    double trap1 = 0.0;
    for (std::size_t j = 0; j < count; ++j) {
      const double v0 = std::abs(f[j].value.real());
      const double v1 = std::abs(df[j].value.real());
      n.sup0 = std::max(n.sup0, v0);
      n.sup1 = std::max(n.sup1, v1);
      const double weight = (j == 0 || j + 1 == count) ? 0.5 : 1.0;
      trap0 += weight * v0;
      trap1 += weight * v1;
      n.fft_error = std::max({n.fft_error, f[j].abs_error_estimate + f[j].truncation_bound,
                              df[j].abs_error_estimate + df[j].truncation_bound});
    }
    // |f(t)| <= C_m A / (1 + t^2) beyond t_end, on both sides.
    const double tail_angle = kPi / 2.0 - std::atan(t_end);
    n.tail0 = 2.0 * n.c_m * a.a0 * tail_angle;
    n.tail1 = 2.0 * n.c_m * a.a1 * tail_angle;
    n.pointwise0 = n.c_m * a.a0 / (1.0 + t_max * t_max);
    n.l1_0 = 2.0 * base * trap0 + n.tail0;
    n.l1_1 = 2.0 * base * trap1 + n.tail1;
    for (std::size_t j : {std::size_t{0}, count / 2, count - 1}) {
      const double ref = f_eval(m, grid.at(j), tol).value.real();
      n.spot_diff = std::max(n.spot_diff, std::abs(ref - f[j].value.real()));
    }
  });

  VerificationReport r;
  r.property_id = "1a";
  r.params = {{"m_list", m_json(m_list)},
              {"t_max", t_max},
              {"tol", tol},
              {"fft_half_width", fft.half_width},
              {"fft_points", fft.points}};
  r.grid = GridSpec(GridAxis::linear("t", 0.0, t_end, count));
  r.threshold = ratio_threshold;
  r.tolerance = tol;

  std::vector<double> cols[4];
  auto per_m = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m_list.size(); ++i) {
    const Norms& n = norms[i];
    cols[0].push_back(n.sup0);
    cols[1].push_back(n.l1_0);
    cols[2].push_back(n.sup1);
    cols[3].push_back(n.l1_1);
    per_m.push_back({{"m", m_list[i]},
                     {"sup_f", n.sup0},
                     {"l1_f", n.l1_0},
                     {"sup_df", n.sup1},
                     {"l1_df", n.l1_1},
                     {"c_m", n.c_m},
                     {"l1_tail_f", n.tail0},
                     {"l1_tail_df", n.tail1},
                     {"fft_error_bound", n.fft_error},
                     {"spot_check_abs_diff", n.spot_diff}});
    r.notes.push_back("m=" + std::to_string(m_list[i]) + ": tail bound C_m A/(1+t_max^2) = " +
                      fmt(n.pointwise0) + ", L1 tail beyond t_max = " + fmt(n.tail0));
  }
  const char* names[4] = {"sup_f", "l1_f", "sup_df", "l1_df"};
  nlohmann::ordered_json ratios;
  r.extremum = 0.0;
  for (int k = 0; k < 4; ++k) {
    const double ratio = spread(cols[k]);
    ratios[names[k]] = ratio;
    r.extremum = std::max(r.extremum, ratio);
  }
  r.details["per_m"] = per_m;
  r.details["ratios"] = ratios;
  r.details["decay_constants"] = {{"a0", a.a0}, {"a1", a.a1}};
  r.pass = std::isfinite(r.extremum) && r.extremum <= ratio_threshold;
  return r;
}

VerificationReport verify_1b(std::span<const int> m_list, double tol) {
  require_m_list(m_list, "verify_1b");
  std::vector<double> f0(m_list.size());
  std::vector<double> lm(m_list.size());
  parallel_for(m_list.size(), [&](std::size_t i) {
    f0[i] = f_eval(m_list[i], 0.0, tol).value.real();
    lm[i] = tail_mass_eval(m_list[i], 25.0, tol).value.real();
  });

  VerificationReport r;
  r.property_id = "1b";
  r.params = {{"m_list", m_json(m_list)}, {"tol", tol}, {"s_min", 25.0}};
  r.grid = GridSpec(GridAxis::from_points(
      "m", std::vector<double>(m_list.begin(), m_list.end())));
  r.threshold = 0.5;
  r.tolerance = tol;
  r.extremum = kInf;
  double min_f0 = kInf;
  auto per_m = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m_list.size(); ++i) {
    min_f0 = std::min(min_f0, f0[i]);
    r.extremum = std::min(r.extremum, f0[i] / lm[i]);
    per_m.push_back({{"m", m_list[i]}, {"f_m(0)", f0[i]}, {"L_m", lm[i]}, {"ratio", f0[i] / lm[i]}});
  }
  r.details["per_m"] = per_m;
  r.details["min_f_m(0)"] = min_f0;

  // L_m should grow with m; if it does not, only positivity is asserted.
  std::vector<std::size_t> order(m_list.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return m_list[x] < m_list[y]; });
  bool monotone = true;
  for (std::size_t i = 1; i < order.size(); ++i)
    if (lm[order[i]] < lm[order[i - 1]]) monotone = false;
  r.details["L_m_monotone"] = monotone;
  if (!monotone) r.notes.push_back("L_m is not increasing in m on this list; positivity only");

  r.pass = min_f0 > 0.0 && r.extremum >= r.threshold;
  return r;
}

VerificationReport verify_2a(std::span<const int> m_list, double radius, std::size_t n_radii,
                             std::size_t n_angles, double slope_tolerance) {
  require_m_list(m_list, "verify_2a");
  if (!(radius > 1e-4) || radius > 1.0 / 3.0 - kPoleGuard)
    throw PreconditionError("verify_2a: radius must lie in (1e-4, 1/3 - pole guard]");
  if (n_radii < 2 || n_angles < 1) throw PreconditionError("verify_2a: grid too small");
  const GridAxis radii = GridAxis::log("|lambda|", 1e-4, radius - 1e-8, n_radii);
  const GridAxis angles = GridAxis::linear("arg", 0.0, 2.0 * kPi * (n_angles - 1) / n_angles,
                                           n_angles);
  const GridAxis fit = GridAxis::log("fit", 1e-3, 1e-1, 41);
  const auto rs = radii.points();
  const auto as = angles.points();
  const auto fs = fit.points();

  struct Row {
    double sup = -kInf;
    double slope = 0.0;
    double parity = 0.0;
  };
  std::vector<Row> rows(m_list.size());
  parallel_for(m_list.size(), [&](std::size_t i) {
    const int m = m_list[i];
    const double k = static_cast<double>(k_of(m));
    Row& row = rows[i];
    for (double rad : rs)
      for (double arg : as) {
        const auto v = transform_eval(m, std::polar(rad, arg));
        row.sup = std::max(row.sup, v.log_mag - k * std::log(rad));
      }
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (double x : fs) {
      const double lx = std::log(x);
      const double ly = transform_eval(m, {x, 0.0}).log_mag;
      const double lneg = transform_eval(m, {-x, 0.0}).log_mag;
      row.parity = std::max(row.parity, std::abs(ly - lneg));
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
    }
    const double n = static_cast<double>(fs.size());
    row.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  });

  VerificationReport r;
  r.property_id = "2a";
  r.params = {{"m_list", m_json(m_list)},
              {"radius", radius},
              {"n_radii", n_radii},
              {"n_angles", n_angles},
              {"slope_tolerance", slope_tolerance}};
  r.grid = GridSpec({radii, angles, fit});
  r.threshold = slope_tolerance;
  r.tolerance = slope_tolerance;
  r.extremum = 0.0;
  bool sup_finite = true;
  auto per_m = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m_list.size(); ++i) {
    const int m = m_list[i];
    const double k = static_cast<double>(k_of(m));
    const double rel = std::abs(rows[i].slope - k) / k;
    r.extremum = std::max(r.extremum, rel);
    sup_finite = sup_finite && std::isfinite(rows[i].sup);
    const double exact = static_cast<double>(m) * (std::ldexp(1.0, m) + 1.0);
    per_m.push_back({{"m", m},
                     {"k_m", k_of(m)},
                     {"slope", rows[i].slope},
                     {"slope_rel_error", rel},
                     {"exact_order", exact},
                     {"sup_log_ratio", rows[i].sup},
                     {"parity_log_diff", rows[i].parity}});
    if (rel > slope_tolerance)
      r.notes.push_back("m=" + std::to_string(m) + ": fitted slope " + fmt(rows[i].slope) +
                        " vs k_m = " + fmt(k) + "; order at 0 is m(2^m + 1) = " + fmt(exact));
  }
  r.details["per_m"] = per_m;
  r.details["sup_finite"] = sup_finite;
  r.pass = sup_finite && r.extremum <= slope_tolerance;
  return r;
}

VerificationReport verify_2b(std::span<const int> m_list, double c, double im_max,
                             std::size_t n_re, std::size_t n_im, double ratio_threshold) {
  require_m_list(m_list, "verify_2b");
  if (!(c > 0.0) || !(im_max > 0.0) || n_re < 2 || n_im < 2)
    throw PreconditionError("verify_2b: need c > 0, im_max > 0 and at least 2 points per axis");
  std::vector<double> widths;
  for (int m : m_list) {
    const double w = 1.0 / (c * std::log(static_cast<double>(k_of(m)) + 1.0));
    const double domain = transform_half_width(m) - kPoleGuard;
    if (!(w < domain)) {
      std::ostringstream msg;
      msg << "verify_2b: strip S_{k,c} (k = " << k_of(m) << ", c = " << c << ", half-width "
          << w << ") exceeds the continuation domain |Re| < " << transform_half_width(m)
          << " at m = " << m << "; choose c > "
          << 1.0 / (domain * std::log(static_cast<double>(k_of(m)) + 1.0));
      throw DomainError(msg.str());
    }
    widths.push_back(w);
  }
  const GridAxis u_axis = GridAxis::linear("Re/halfwidth", -(1.0 - 1e-9), 1.0 - 1e-9, n_re);
  const GridAxis im_axis = GridAxis::linear("Im", 0.0, im_max, n_im);
  const auto us = u_axis.points();
  const auto ys = im_axis.points();

  std::vector<double> sups(m_list.size(), 0.0);
  std::vector<double> argmax_im(m_list.size(), 0.0);
  for (std::size_t i = 0; i < m_list.size(); ++i) {
    const int m = m_list[i];
    std::vector<double> row_sup(us.size(), -kInf);
    std::vector<double> row_arg(us.size(), 0.0);
    parallel_for(us.size(), [&](std::size_t a) {
      const double x = us[a] * widths[i];
      for (double y : ys) {
        const std::complex<double> lambda(x, y);
        const double lv = transform_eval(m, lambda).log_mag + std::log(std::abs(lambda));
        if (lv > row_sup[a]) {
          row_sup[a] = lv;
          row_arg[a] = y;
        }
      }
    });
    double best = -kInf;
    for (std::size_t a = 0; a < us.size(); ++a)
      if (row_sup[a] > best) {
        best = row_sup[a];
        argmax_im[i] = row_arg[a];
      }
    sups[i] = std::exp(best);
  }

  VerificationReport r;
  r.property_id = "2b";
  r.params = {{"m_list", m_json(m_list)},
              {"c", c},
              {"im_max", im_max},
              {"n_re", n_re},
              {"n_im", n_im}};
  r.grid = GridSpec({u_axis, im_axis});
  r.threshold = ratio_threshold;
  r.extremum = spread(sups);
  auto per_m = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m_list.size(); ++i)
    per_m.push_back({{"m", m_list[i]},
                     {"half_width", widths[i]},
                     {"sup", sups[i]},
                     {"argmax_im", argmax_im[i]}});
  r.details["per_m"] = per_m;
  r.notes.push_back("Re axis is scaled by each strip half-width; |f^| is even in Im, so Im >= 0");
  r.notes.push_back("beyond Im = im_max, |lambda f^(lambda)| decays like |lambda|^-3");
  r.pass = std::isfinite(r.extremum) && r.extremum <= ratio_threshold;
  return r;
}

VerificationReport verify_q_strip(std::span<const int> m_list, double re_max,
                                  std::size_t n_re, std::size_t n_im, int threshold_max) {
  require_m_list(m_list, "verify_q_strip");
  if (!(re_max >= 1.0) || n_re < 2 || n_im < 1)
    throw PreconditionError("verify_q_strip: need re_max >= 1 and a nonempty grid");
  constexpr double kBound = 1.0 + 1e-12;
  const GridAxis re_axis = GridAxis::log("Re", 1e-3, re_max, n_re);
  const GridAxis disc_r = GridAxis::linear("disc |lambda|", 0.75 / 64, 0.75 * (1.0 - 1e-12), 64);
  const GridAxis disc_arg = GridAxis::linear("disc arg", 0.0, kPi / 2.0, 65);
  std::vector<double> re = re_axis.points();
  re.insert(re.begin(), 0.0);
  const auto drs = disc_r.points();
  const auto das = disc_arg.points();

  struct Row {
    double strip_max = 0.0;
    double disc_max = 0.0;
  };
  std::vector<Row> rows(m_list.size());
  parallel_for(m_list.size(), [&](std::size_t i) {
    const int m = m_list[i];
    const double h = 1.0 / (2.0 * m);
    for (double x : re)
      for (std::size_t j = 0; j < n_im; ++j) {
        const double y = h * static_cast<double>(j) / static_cast<double>(n_im);
        const std::complex<double> lambda(x, y);
        if (std::abs(lambda) < 0.75) continue;
        rows[i].strip_max = std::max(rows[i].strip_max, q_eval(m, lambda).magnitude());
      }
    for (double rad : drs)
      for (double arg : das)
        rows[i].disc_max = std::max(rows[i].disc_max, q_eval(m, std::polar(rad, arg)).magnitude());
  });

  std::vector<std::size_t> order(m_list.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return m_list[x] < m_list[y]; });
  // Smallest m from which every larger tested m satisfies the bound.
  double m_star = kInf;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Row& row = rows[*it];
    if (std::max(row.strip_max, row.disc_max) > kBound) break;
    m_star = m_list[*it];
  }

  VerificationReport r;
  r.property_id = "q-strip";
  r.params = {{"m_list", m_json(m_list)},
              {"re_max", re_max},
              {"n_re", n_re},
              {"n_im", n_im},
              {"bound", kBound}};
  r.grid = GridSpec({re_axis, GridAxis::linear("Im/(1/2m)", 0.0,
                                               static_cast<double>(n_im - 1) / n_im, n_im),
                     disc_r, disc_arg});
  r.threshold = threshold_max;
  r.tolerance = 1e-12;
  r.extremum = m_star;
  auto per_m = nlohmann::ordered_json::array();
  for (std::size_t i : order) {
    const Row& row = rows[i];
    const bool ok = std::max(row.strip_max, row.disc_max) <= kBound;
    std::string status = ok ? "pass" : (m_list[i] < m_star ? "expected-failure" : "fail");
    per_m.push_back({{"m", m_list[i]},
                     {"strip_max", row.strip_max},
                     {"disc_max", row.disc_max},
                     {"status", status}});
    if (!ok && m_list[i] < m_star)
      r.notes.push_back("m=" + std::to_string(m_list[i]) + ": max |Q_m| = " +
                        fmt(std::max(row.strip_max, row.disc_max)) +
                        " (expected failure below m*)");
  }
  r.details["per_m"] = per_m;
  r.details["m_star"] = std::isfinite(m_star) ? nlohmann::ordered_json(static_cast<int>(m_star))
                                              : nlohmann::ordered_json(nullptr);
  r.notes.push_back("|Q_m| is even and conjugation-symmetric; the first quadrant is swept, "
                    "with the column Re = 0 added to the Re axis");
  r.pass = m_star <= threshold_max;
  return r;
}

VerificationReport verify_c_m_uniform(std::span<const int> m_list, double upper,
                                      double ratio_threshold) {
  require_m_list(m_list, "verify_c_m_uniform");
  std::vector<CmEstimate> est(m_list.size());
  parallel_for(m_list.size(), [&](std::size_t i) {
    est[i] = c_m_estimate(m_list[i], c_m_default_grid(m_list[i], upper));
  });

  VerificationReport r;
  r.property_id = "c_m-uniform";
  r.params = {{"m_list", m_json(m_list)}, {"upper", upper}};
  r.grid = GridSpec(GridAxis::linear("s", 0.0, upper,
                                     static_cast<std::size_t>(std::ceil(upper / 1e-3)) + 1));
  r.notes.push_back("plus spacing 1e-3 m^-1/2 on 25(1 +- m^-1/2) per m");
  r.threshold = ratio_threshold;
  std::vector<double> values;
  auto per_m = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m_list.size(); ++i) {
    values.push_back(est[i].value);
    per_m.push_back({{"m", m_list[i]},
                     {"c_m", est[i].value},
                     {"argmax", est[i].argmax},
                     {"orders", {est[i].orders[0], est[i].orders[1], est[i].orders[2]}},
                     {"grid_points", est[i].grid_points},
                     {"fd_checked_points", est[i].checked_points},
                     {"fd_worst_relative_error", est[i].worst_fd_relative_error}});
  }
  r.extremum = spread(values);
  r.details["per_m"] = per_m;
  r.pass = std::isfinite(r.extremum) && r.extremum <= ratio_threshold;
  return r;
}

VerificationReport verify_thm23_witness(const RateFunction& m, const RateFunction& k,
                                        double eps, double c, std::span<const double> t_list,
                                        double ratio_threshold) {
  const double m0 = m.eval(0.0);
  if (!(eps > 0.0 && eps < 1.0 / 6.0)) {
    std::ostringstream msg;
    msg << "verify_thm23_witness: eps = " << eps << " violates 0 < eps < 1/6";
    throw ConstraintError(msg.str());
  }
  if (!(2.0 * eps <= std::exp(-1.0 / m0))) {
    std::ostringstream msg;
    msg << "verify_thm23_witness: 2 eps = " << 2.0 * eps << " violates 2 eps <= exp(-1/M(0)) = "
        << std::exp(-1.0 / m0);
    throw ConstraintError(msg.str());
  }
  if (t_list.empty()) throw PreconditionError("verify_thm23_witness: t_list must be nonempty");
  const RateFunction mk = compose_mk(m, k);

  VerificationReport r;
  r.property_id = "thm23-witness";
  r.params = {{"M", m.source()},
              {"K", k.source()},
              {"eps", eps},
              {"c", c},
              {"t_list", std::vector<double>(t_list.begin(), t_list.end())}};
  r.grid = GridSpec(GridAxis::from_points("t", t_list));
  r.threshold = ratio_threshold;
  r.extremum = 0.0;
  r.notes.push_back("combined bound is R + (T1 + T2) / R; T1, T2 bound the supremum that "
                    "enters with a 1/R prefactor");
  bool limits_ok = true;
  auto per_t = nlohmann::ordered_json::array();
  for (double t : t_list) {
    if (!(t >= 1.0)) throw PreconditionError("verify_thm23_witness: every t must be >= 1");
    const double s = right_inverse(mk, t);
    if (!(s > 0.0)) {
      std::ostringstream msg;
      msg << "verify_thm23_witness: M_K^-1(" << t << ") = 0; t must exceed M_K(0)";
      throw PreconditionError(msg.str());
    }
    const double kk = std::floor(t);
    const double big_r = s / eps;
    const double log_r = std::log(big_r);
    // log T1 and log T2; T1 uses eps R = s.
    const double log_t1 = log_r - k.eval_log(s) + t / m.eval(s);
    const double log_t2 = log_r + t / m0 + kk * std::log(2.0 * eps);
    const double scaled = std::exp(log_t1 - log_r) + std::exp(log_t2 - log_r);
    const double ratio = 1.0 + scaled / big_r;
    const double need_log = c * std::log(kk + 1.0) / m0;
    const double need_eps = 1.0 / (eps * m0);
    const bool ok = big_r >= need_log && big_r >= need_eps;
    limits_ok = limits_ok && ok;
    r.extremum = std::max(r.extremum, ratio);
    per_t.push_back({{"t", t},
                     {"k", kk},
                     {"R", big_r},
                     {"log_T1", log_t1},
                     {"log_T2", log_t2},
                     {"T1_over_R", std::exp(log_t1 - log_r)},
                     {"T2_over_R", std::exp(log_t2 - log_r)},
                     {"ratio", ratio},
                     {"R_min_log", need_log},
                     {"R_min_eps", need_eps},
                     {"R_limits_ok", ok}});
    if (!ok)
      r.notes.push_back("t=" + fmt(t) + ": R = " + fmt(big_r) + " is below a required limit");
  }
  r.details["per_t"] = per_t;
  r.pass = limits_ok && r.extremum <= ratio_threshold;
  return r;
}

std::vector<VerificationReport> verify_all(const VerifyConfig& config) {
  if (config.m_list.empty()) throw PreconditionError("verify_all: config must name m_list");
  std::vector<VerificationReport> out;
  auto run = [&](const std::string& id, auto&& fn) {
    try {
      out.push_back(fn());
    } catch (const std::exception& e) {
      out.push_back(failed_report(id, e.what()));
    }
  };
  const std::span<const int> ms(config.m_list);
  run("1a", [&] {
    return verify_1a(ms, config.t_max, config.tol, config.fft, config.norm_ratio_threshold);
  });
  run("1b", [&] { return verify_1b(ms, std::min(config.tol, 1e-10)); });
  run("2a", [&] {
    return verify_2a(ms, config.disc_radius, config.n_radii, config.n_angles,
                     config.slope_tolerance);
  });
  run("2b", [&] {
    return verify_2b(ms, config.strip_c, config.im_max, config.strip_n_re, config.strip_n_im,
                     config.strip_ratio_threshold);
  });
  run("q-strip", [&] {
    return verify_q_strip(config.q_m_list, config.re_max, config.q_n_re, config.q_n_im,
                          config.q_threshold_max);
  });
  run("c_m-uniform", [&] {
    return verify_c_m_uniform(ms, config.c_m_upper, config.c_m_ratio_threshold);
  });
  run("thm23-witness", [&] {
    return verify_thm23_witness(parse_rate(config.witness_m), parse_rate(config.witness_k),
                                config.witness_eps, config.witness_c, config.witness_t,
                                config.witness_ratio_threshold);
  });
  run("reg-growth", [&] {
    auto rep = regular_growth_check(parse_rate(config.rate_m), config.reg_c, config.reg_grid);
    rep.params["role"] = "M";
    return rep;
  });
  run("reg-growth", [&] {
    auto rep = regular_growth_check(parse_rate(config.rate_k), config.reg_c, config.reg_grid);
    rep.params["role"] = "K";
    return rep;
  });
  run("cond-1.3", [&] {
    return condition_13_check(parse_rate(config.rate_m), parse_rate(config.rate_k),
                              config.cond_eps, config.cond_grid);
  });
  run("exp-growth", [&] {
    auto rep = exp_growth_check(compose_mk(parse_rate(config.rate_m), parse_rate(config.rate_k)),
                                config.exp_alpha, config.exp_grid);
    rep.params["role"] = "M_K";
    return rep;
  });
  return out;
}

bool all_passed(std::span<const VerificationReport> reports) {
  return std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) {
    return r.pass || r.expected_failure;
  });
}

nlohmann::ordered_json report_bundle(std::span<const VerificationReport> reports,
                                     const VerifyConfig& config, bool with_timestamp) {
  nlohmann::ordered_json j;
  j["tool"] = "tauberkit";
  j["version"] = "0.1.0";
  if (with_timestamp) {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    std::ostringstream stamp;
    stamp << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ");
    j["generated_at"] = stamp.str();
  }
  j["config"] = config.to_json();
  j["pass"] = all_passed(reports);
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(r.to_json());
  j["reports"] = arr;
  return j;
}

}  // namespace tauberkit
