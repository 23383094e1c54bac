#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace tauberkit {

enum class Spacing { linear, log, explicit_points };

std::string to_string(Spacing spacing);

/// One axis of an evaluation grid. Linear and log axes are reconstructed
/// from (min, max, count); explicit axes carry their points.
struct GridAxis {
  std::string name = "s";
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 0;
  Spacing spacing = Spacing::linear;
  std::vector<double> explicit_points;

  static GridAxis linear(std::string name, double min, double max, std::size_t count);
  static GridAxis log(std::string name, double min, double max, std::size_t count);
  static GridAxis from_points(std::string name, std::span<const double> points);

  std::vector<double> points() const;
  /// Nested refinement: the same range with 2(count-1)+1 points.
  GridAxis refined() const;
  nlohmann::ordered_json to_json() const;
};

struct GridSpec {
  std::vector<GridAxis> axes;

  GridSpec() = default;
  explicit GridSpec(GridAxis axis) { axes.push_back(std::move(axis)); }
  GridSpec(std::vector<GridAxis> a) : axes(std::move(a)) {}

  nlohmann::ordered_json to_json() const;
};

/// Outcome of one property certification.
struct VerificationReport {
  std::string property_id;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  GridSpec grid;
  double extremum = 0.0;
  double threshold = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  /// Failure inside a regime the theory only covers asymptotically.
  bool expected_failure = false;
  std::vector<std::string> notes;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();

  nlohmann::ordered_json to_json() const;
};

/// Doubles formatted with 17 significant digits.
std::string format_double(double value);

}  // namespace tauberkit
