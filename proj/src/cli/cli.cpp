#include "tauberkit/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tauberkit/construction.hpp"
#include "tauberkit/errors.hpp"
#include "tauberkit/inversion.hpp"
#include "tauberkit/quadrature.hpp"
#include "tauberkit/rate_function.hpp"
#include "tauberkit/report.hpp"
#include "tauberkit/verify.hpp"

namespace tauberkit {

namespace {

// Thrown for bad flag values discovered after parsing; maps to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct TRange {
  std::vector<double> values;
  std::optional<double> min;
  std::optional<double> max;
  std::size_t count = 1;
  bool log = false;

  void attach(CLI::App* app) {
    app->add_option("--t", values, "Explicit t values")->delimiter(',');
    app->add_option("--t-min", min, "Range start");
    app->add_option("--t-max", max, "Range end");
    app->add_option("--t-count", count, "Number of range points")->check(CLI::PositiveNumber);
    app->add_flag("--log", log, "Log-spaced range");
  }

  std::vector<double> points() const {
    if (!values.empty()) {
      if (min || max) throw UsageError("give either --t or --t-min/--t-max, not both");
      return values;
    }
    if (!min || !max) throw UsageError("need --t or both --t-min and --t-max");
    if (log) return GridAxis::log("t", *min, *max, count).points();
    return GridAxis::linear("t", *min, *max, count).points();
  }
};

struct Output {
  std::string format = "csv";
  std::string path;

  void attach(CLI::App* app) {
    app->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app->add_option("--output,-o", path, "Write to this file instead of stdout");
  }
};

// Column-oriented table; cells hold numbers or strings.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::ordered_json>> rows;

  std::string render(const std::string& format) const {
    std::ostringstream out;
    if (format == "json") {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& row : rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < columns.size(); ++i) obj[columns[i]] = row[i];
        arr.push_back(obj);
      }
      out << arr.dump(2) << '\n';
      return out.str();
    }
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
    out << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out << ',';
        if (row[i].is_number_float()) out << format_double(row[i].get<double>());
        else if (row[i].is_string()) out << row[i].get<std::string>();
        else out << row[i].dump();
      }
      out << '\n';
    }
    return out.str();
  }
};

// JSON cannot hold inf/nan; keep them readable as strings.
nlohmann::ordered_json cell(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

void emit(const std::string& text, const Output& o, std::ostream& out) {
  if (o.path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.path);
  if (!file) throw UsageError("cannot open output file " + o.path);
  file << text;
}

int require_even(int m) {
  if (m < 2 || m % 2 != 0 || m > kMaxOrder)
    throw UsageError("--m must be an even integer in [2, " + std::to_string(kMaxOrder) + "]");
  return m;
}

Table predict_table(const std::string& m_dsl, const std::string& k_dsl, double c,
                    const std::vector<double>& ts) {
  if (!(c > 0.0 && c <= 1.0)) throw UsageError("--c must lie in (0, 1]");
  const RateFunction m = parse_rate(m_dsl);
  const RateFunction k = parse_rate(k_dsl);
  const RateFunction mk = compose_mk(m, k);
  Table t{{"t", "ct", "M_K(0)", "M_K_inverse_ct", "rate", "status"}, {}};
  const double mk0 = mk.eval(0.0);
  for (double x : ts) {
    if (!(x > 0.0)) throw UsageError("t values must be positive");
    std::vector<nlohmann::ordered_json> row = {x, c * x, mk0};
    try {
      const double rate = predicted_rate(m, k, c, x);
      row.push_back(1.0 / rate);
      row.push_back(rate);
      row.push_back("ok");
    } catch (const DegenerateRateError&) {
      row.push_back(0.0);
      row.push_back("inf");
      row.push_back("degenerate");
    } catch (const UnboundedSearchError&) {
      row.push_back("inf");
      row.push_back(0.0);
      row.push_back("unbounded-search");
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table eval_table(int m, const std::vector<double>& ts, double tol, bool derivative) {
  require_even(m);
  if (!(tol >= kMinTolerance)) throw UsageError("--tol must be >= 1e-12");
  Table t{{"t", derivative ? "f_m_prime" : "f_m", "abs_error_estimate", "truncation_bound",
           "nodes", "status"},
          {}};
  for (double x : ts) {
    try {
      const auto r = derivative ? f_deriv_eval(m, x, tol) : f_eval(m, x, tol);
      t.rows.push_back({x, r.value.real(), r.abs_error_estimate, r.truncation_bound,
                        r.nodes_used, "ok"});
    } catch (const ToleranceError& e) {
      t.rows.push_back({x, "nan", "nan", "nan", 0, "tolerance-not-met"});
    }
  }
  return t;
}

Table transform_table(int m, const std::vector<double>& re, const std::vector<double>& im) {
  require_even(m);
  if (re.empty() || im.empty()) throw UsageError("need --re and --im values");
  Table t{{"re", "im", "log_mag", "phase", "abs", "status"}, {}};
  for (double x : re)
    for (double y : im) {
      try {
        const auto v = transform_eval(m, {x, y});
        t.rows.push_back({x, y, cell(v.log_mag), v.phase, cell(v.magnitude()), "ok"});
      } catch (const DomainError&) {
        t.rows.push_back({x, y, "nan", "nan", "nan", "outside-domain"});
      } catch (const PoleError& e) {
        t.rows.push_back({x, y, "nan", "nan", "nan", "pole:" + e.factor()});
      }
    }
  return t;
}

Table summary_table(const nlohmann::json& bundle) {
  if (!bundle.contains("reports") || !bundle.at("reports").is_array())
    throw UsageError("report: input is not a verification bundle");
  Table t{{"property_id", "pass", "expected_failure", "extremum", "threshold"}, {}};
  for (const auto& r : bundle.at("reports")) {
    auto num = [](const nlohmann::json& v) -> nlohmann::ordered_json {
      if (v.is_number()) return v.get<double>();
      return v.is_string() ? v.get<std::string>() : "nan";
    };
    t.rows.push_back({r.value("property_id", ""), r.value("pass", false) ? "true" : "false",
                      r.value("expected_failure", false) ? "true" : "false",
                      num(r.value("extremum", nlohmann::json())),
                      num(r.value("threshold", nlohmann::json()))});
  }
  return t;
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("invalid JSON in " + path + ": " + e.what());
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decay-rate predictor and verification suite", "tauberkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tauberkit 0.1.0");

  Output output;
  TRange trange;

  auto* predict = app.add_subcommand("predict", "Predicted decay rate 1 / M_K^-1(ct)");
  std::string m_dsl, k_dsl;
  double c = 1.0;
  predict->add_option("--M", m_dsl, "Rate M (DSL)")->required();
  predict->add_option("--K", k_dsl, "Rate K (DSL)")->required();
  predict->add_option("--c", c, "Constant c in (0, 1]");
  trange.attach(predict);
  output.attach(predict);

  auto* eval = app.add_subcommand("eval", "Evaluate f_m(t) by adaptive quadrature");
  int m = 0;
  double tol = 1e-10;
  bool derivative = false;
  eval->add_option("--m", m, "Even construction order")->required();
  eval->add_option("--tol", tol, "Absolute tolerance (>= 1e-12)");
  eval->add_flag("--derivative", derivative, "Evaluate f_m' instead");
  trange.attach(eval);
  output.attach(eval);

  auto* transform = app.add_subcommand("transform", "Evaluate the continued transform of f_m");
  std::vector<double> re, im;
  transform->add_option("--m", m, "Even construction order")->required();
  transform->add_option("--re", re, "Real parts")->delimiter(',')->required();
  transform->add_option("--im", im, "Imaginary parts")->delimiter(',')->required();
  output.attach(transform);

  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  std::string config_path;
  std::vector<int> m_list;
  bool no_timestamp = false;
  verify->add_option("--config", config_path, "JSON config file");
  verify->add_option("--m-list", m_list, "Construction orders")->delimiter(',');
  verify->add_flag("--no-timestamp", no_timestamp, "Omit generated_at");
  verify->add_option("--output,-o", output.path, "Write the bundle to this file");

  auto* report = app.add_subcommand("report", "Summarize a verification bundle");
  std::string input_path;
  report->add_option("--input", input_path, "Bundle written by verify")->required();
  output.attach(report);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << "tauberkit 0.1.0\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (predict->parsed()) {
      emit(predict_table(m_dsl, k_dsl, c, trange.points()).render(output.format), output, out);
      return kExitOk;
    }
    if (eval->parsed()) {
      emit(eval_table(m, trange.points(), tol, derivative).render(output.format), output, out);
      return kExitOk;
    }
    if (transform->parsed()) {
      emit(transform_table(m, re, im).render(output.format), output, out);
      return kExitOk;
    }
    if (report->parsed()) {
      emit(summary_table(read_json_file(input_path)).render(output.format), output, out);
      return kExitOk;
    }
    VerifyConfig config;
    if (!config_path.empty()) config = VerifyConfig::from_json(read_json_file(config_path));
    if (!m_list.empty()) {
      for (int x : m_list) require_even(x);
      config.m_list = m_list;
    }
    const auto reports = verify_all(config);
    emit(report_bundle(reports, config, !no_timestamp).dump(2) + "\n", output, out);
    return all_passed(reports) ? kExitOk : kExitVerificationFailed;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: invalid rate DSL: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
}

}  // namespace tauberkit
