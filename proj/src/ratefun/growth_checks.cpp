#include "tauberkit/growth_checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "tauberkit/errors.hpp"

namespace tauberkit {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_grid(const std::vector<double>& pts, const char* who) {
  if (pts.empty()) throw PreconditionError(std::string(who) + ": grid must be nonempty");
  for (double s : pts)
    if (!(s >= 0.0))
      throw PreconditionError(std::string(who) + ": grid points must be nonnegative");
}

}  // namespace

BoundednessVerdict bounded_above(std::span<const double> values) {
  BoundednessVerdict v;
  v.head_sup = v.tail_sup = v.sup = kNegInf;
  if (values.size() < 2) return v;
  const std::size_t tail = std::max<std::size_t>(1, values.size() / 4);
  const std::size_t split = values.size() - tail;
  for (std::size_t i = 0; i < values.size(); ++i) {
    double& slot = i < split ? v.head_sup : v.tail_sup;
    slot = std::max(slot, values[i]);
  }
  v.sup = std::max(v.head_sup, v.tail_sup);
  v.bounded = v.tail_sup <= v.head_sup + 1e-10 * (1.0 + std::abs(v.head_sup));
  return v;
}

VerificationReport regular_growth_check(const RateFunction& m, double c,
                                        const GridAxis& s_grid) {
  if (!(c > 0.0 && c < 1.0))
    throw PreconditionError("regular_growth_check: c must lie in (0, 1)");
  const auto pts = s_grid.points();
  require_grid(pts, "regular_growth_check");

  VerificationReport r;
  r.property_id = "reg-growth";
  r.params["M"] = m.source();
  r.params["c"] = c;
  r.grid = GridSpec(s_grid);
  r.threshold = 1.0;
  r.tolerance = 1e-10;

  double worst = kNegInf;
  double worst_s = pts.front();
  for (double s : pts) {
    const double log_m = m.eval_log(s);
    const double shifted = s + c * std::exp(-log_m);
    const double ratio = std::exp(std::log(c) + m.eval_log(shifted) - log_m);
    if (ratio > worst) {
      worst = ratio;
      worst_s = s;
    }
  }
  r.extremum = worst;
  r.pass = worst <= 1.0 + r.tolerance;
  r.details["worst_s"] = worst_s;
  std::ostringstream note;
  note << "worst ratio c*M(s+c/M(s))/M(s) = " << format_double(worst)
       << " at s = " << format_double(worst_s);
  r.notes.push_back(note.str());
  return r;
}

VerificationReport regular_growth_check(const RateFunction& m, double c,
                                        std::span<const double> s_grid) {
  return regular_growth_check(m, c, GridAxis::from_points("s", s_grid));
}

VerificationReport condition_13_check(const RateFunction& m, const RateFunction& k,
                                      double eps, const GridAxis& s_grid) {
  if (!(eps > 0.0 && eps < 1.0))
    throw PreconditionError("condition_13_check: eps must lie in (0, 1)");
  const auto pts = s_grid.points();
  require_grid(pts, "condition_13_check");

  VerificationReport r;
  r.property_id = "cond-1.3";
  r.params["M"] = m.source();
  r.params["K"] = k.source();
  r.params["eps"] = eps;
  r.grid = GridSpec(s_grid);
  r.tolerance = 1e-10;

  std::vector<double> diffs;
  std::vector<double> skipped;
  for (double s : pts) {
    const double log_k = k.eval_log(s);
    const double log_sm = std::log(s) + m.eval_log(s);
    if (!(log_k > 0.0) || !std::isfinite(log_sm)) {
      skipped.push_back(s);
      continue;
    }
    diffs.push_back(std::log(log_k) - (1.0 - eps) * log_sm);
  }
  r.details["compared_points"] = diffs.size();
  r.details["skipped_points"] = skipped;
  if (!skipped.empty())
    r.notes.push_back("domain: " + std::to_string(skipped.size()) +
                      " grid point(s) skipped where K(s) <= 1 or s*M(s) = 0");

  if (diffs.empty()) {
    r.extremum = kNegInf;
    r.threshold = kNegInf;
    r.pass = true;
    r.notes.push_back("vacuous: K <= 1 on the whole grid, so K is bounded");
    return r;
  }
  const auto verdict = bounded_above(diffs);
  r.extremum = verdict.sup;
  r.threshold = verdict.head_sup;
  r.pass = verdict.bounded;
  r.details["head_sup"] = verdict.head_sup;
  r.details["tail_sup"] = verdict.tail_sup;
  r.notes.push_back("fitted constant sup[log log K - (1-eps) log(sM)] = " +
                    format_double(verdict.sup));
  if (diffs.size() < 2) r.notes.push_back("fewer than two compared points; not certified");
  return r;
}

VerificationReport condition_13_check(const RateFunction& m, const RateFunction& k,
                                      double eps, std::span<const double> s_grid) {
  return condition_13_check(m, k, eps, GridAxis::from_points("s", s_grid));
}

VerificationReport exp_growth_check(const RateFunction& f, double alpha,
                                    const GridAxis& s_grid) {
  if (!(alpha > 0.0)) throw PreconditionError("exp_growth_check: alpha must be positive");
  const auto pts = s_grid.points();
  require_grid(pts, "exp_growth_check");

  VerificationReport r;
  r.property_id = "exp-growth";
  r.params["f"] = f.source();
  r.params["alpha"] = alpha;
  r.grid = GridSpec(s_grid);
  r.tolerance = 1e-10;

  std::vector<double> gaps;
  gaps.reserve(pts.size());
  for (double s : pts) gaps.push_back(f.eval_log(s) - alpha * s);
  if (gaps.size() == 1) gaps.push_back(gaps.front());
  const auto verdict = bounded_above(gaps);
  r.extremum = verdict.sup;
  r.threshold = verdict.head_sup;
  r.pass = verdict.bounded;
  r.details["head_sup"] = verdict.head_sup;
  r.details["tail_sup"] = verdict.tail_sup;
  r.notes.push_back("log of implied constant sup[log f(s) - alpha s] = " +
                    format_double(verdict.sup));
  return r;
}

VerificationReport exp_growth_check(const RateFunction& f, double alpha,
                                    std::span<const double> s_grid) {
  return exp_growth_check(f, alpha, GridAxis::from_points("s", s_grid));
}

}  // namespace tauberkit
