#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace tauberkit {

namespace detail {
class RateNode;
}

/// A positive, non-decreasing, continuous function on [0, inf).
///
/// Values are immutable once built and cheap to copy (the expression tree is
/// shared). Both a linear evaluation (which may overflow to +inf) and a
/// natural-log evaluation (which never overflows inside the search ceiling)
/// are provided.
///
/// DSL grammar:
///   expr := atom | "sum(" expr "," expr ")" | "prod(" expr "," expr ")"
///   atom := "const:" v | "poly:" a | "logpow:" b | "exp:" a
/// with const:v = v, poly:a = (1+s)^a, logpow:b = log(e+s)^b, exp:a = e^(a s).
class RateFunction {
 public:
  RateFunction(std::shared_ptr<const detail::RateNode> root, std::string source,
               bool strictly_increasing);

  const std::string& source() const noexcept { return source_; }
  bool strictly_increasing() const noexcept { return strictly_increasing_; }

  double eval(double s) const;
  double eval_log(double s) const;
  double operator()(double s) const { return eval(s); }

  const std::shared_ptr<const detail::RateNode>& node() const noexcept {
    return root_;
  }

 private:
  std::shared_ptr<const detail::RateNode> root_;
  std::string source_;
  bool strictly_increasing_;
};

/// Parses the rate DSL. Throws ParseError (with the offending offset) on
/// malformed input and SemanticError on non-positive parameters.
RateFunction parse_rate(std::string_view dsl);

/// M_K(s) = M(s) (log(1+s) + log(1+K(s))). The source string is
/// "mk(<M>,<K>)", which is descriptive only and not accepted by parse_rate.
RateFunction compose_mk(const RateFunction& m, const RateFunction& k);

}  // namespace tauberkit
