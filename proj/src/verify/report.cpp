#include "tauberkit/report.hpp"

#include <cmath>
#include <algorithm>
#include <cstdio>

#include "tauberkit/errors.hpp"

namespace tauberkit {

namespace {

nlohmann::ordered_json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

}  // namespace

std::string to_string(Spacing spacing) {
  switch (spacing) {
    case Spacing::linear: return "linear";
    case Spacing::log: return "log";
    case Spacing::explicit_points: return "explicit";
  }
  return "unknown";
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

GridAxis GridAxis::linear(std::string name, double min, double max,
                          std::size_t count) {
  if (count == 0 || !(max >= min))
    throw PreconditionError("linear grid needs count >= 1 and max >= min");
  return {std::move(name), min, max, count, Spacing::linear, {}};
}

GridAxis GridAxis::log(std::string name, double min, double max,
                       std::size_t count) {
  if (count == 0 || !(min > 0.0) || !(max >= min))
    throw PreconditionError("log grid needs count >= 1 and 0 < min <= max");
  return {std::move(name), min, max, count, Spacing::log, {}};
}

GridAxis GridAxis::from_points(std::string name, std::span<const double> points) {
  if (points.empty()) throw PreconditionError("grid must be nonempty");
  GridAxis axis;
  axis.name = std::move(name);
  axis.explicit_points.assign(points.begin(), points.end());
  axis.count = points.size();
  axis.min = *std::min_element(points.begin(), points.end());
  axis.max = *std::max_element(points.begin(), points.end());
  axis.spacing = Spacing::explicit_points;
  return axis;
}

std::vector<double> GridAxis::points() const {
  if (spacing == Spacing::explicit_points) return explicit_points;
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = min;
    return out;
  }
  const double n = static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    const double u = static_cast<double>(i) / n;
    out[i] = spacing == Spacing::linear
                 ? min + (max - min) * u
                 : std::exp(std::log(min) + (std::log(max) - std::log(min)) * u);
  }
  out.back() = max;
  return out;
}

GridAxis GridAxis::refined() const {
  if (spacing == Spacing::explicit_points)
    throw PreconditionError("explicit grids cannot be refined");
  GridAxis out = *this;
  out.count = count > 1 ? 2 * (count - 1) + 1 : 1;
  return out;
}

nlohmann::ordered_json GridAxis::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["min"] = number(min);
  j["max"] = number(max);
  j["count"] = count;
  j["spacing"] = to_string(spacing);
  if (spacing == Spacing::explicit_points) {
    auto pts = nlohmann::ordered_json::array();
    for (double p : explicit_points) pts.push_back(number(p));
    j["points"] = pts;
  }
  return j;
}

nlohmann::ordered_json GridSpec::to_json() const {
  nlohmann::ordered_json j;
  if (axes.empty()) {
    j["min"] = 0.0;
    j["max"] = 0.0;
    j["count"] = 0;
    j["spacing"] = "none";
    return j;
  }
  j = axes.front().to_json();
  if (axes.size() > 1) {
    auto all = nlohmann::ordered_json::array();
    for (const auto& a : axes) all.push_back(a.to_json());
    j["axes"] = all;
  }
  return j;
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["property_id"] = property_id;
  j["params"] = params;
  j["grid"] = grid.to_json();
  j["extremum"] = number(extremum);
  j["threshold"] = number(threshold);
  j["tolerance"] = number(tolerance);
  j["pass"] = pass;
  j["expected_failure"] = expected_failure;
  j["notes"] = notes;
  if (!details.empty()) j["details"] = details;
  return j;
}

}  // namespace tauberkit
