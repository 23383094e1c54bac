#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tauberkit {

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name):
///   predict   --M dsl --K dsl --c c (--t v... | --t-min a --t-max b [--t-count n] [--log])
///   eval      --m m (t flags) [--tol tol] [--derivative]
///   transform --m m --re x... --im y...
///   verify    [--config file.json] [--m-list 2,4] [--no-timestamp]
///   report    --input bundle.json
/// Every subcommand accepts --format csv|json and --output path. Tabular
/// output prints doubles with 17 significant digits.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tauberkit
