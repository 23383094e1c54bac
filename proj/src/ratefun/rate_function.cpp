#include "tauberkit/rate_function.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <utility>

#include "tauberkit/errors.hpp"

namespace tauberkit {

namespace detail {

class RateNode {
 public:
  virtual ~RateNode() = default;
  virtual double eval(double s) const = 0;
  virtual double eval_log(double s) const = 0;
};

}  // namespace detail

namespace {

using detail::RateNode;
using NodePtr = std::shared_ptr<const RateNode>;

// log(exp(a) + exp(b)) for reals.
double log_add_exp(double a, double b) {
  if (a < b) std::swap(a, b);
  if (b == -std::numeric_limits<double>::infinity()) return a;
  return a + std::log1p(std::exp(b - a));
}

// log(1 + exp(x)) without overflow.
double softplus(double x) {
  if (x > 35.0) return x + std::log1p(std::exp(-x));
  return std::log1p(std::exp(x));
}

class ConstNode final : public RateNode {
 public:
  explicit ConstNode(double value) : value_(value), log_value_(std::log(value)) {}
  double eval(double) const override { return value_; }
  double eval_log(double) const override { return log_value_; }

 private:
  double value_;
  double log_value_;
};

class PolyNode final : public RateNode {
 public:
  explicit PolyNode(double exponent) : exponent_(exponent) {}
  double eval(double s) const override { return std::pow(1.0 + s, exponent_); }
  double eval_log(double s) const override { return exponent_ * std::log1p(s); }

 private:
  double exponent_;
};

class LogPowNode final : public RateNode {
 public:
  explicit LogPowNode(double exponent) : exponent_(exponent) {}
  double eval(double s) const override {
    return std::pow(std::log(std::numbers::e + s), exponent_);
  }
  double eval_log(double s) const override {
    return exponent_ * std::log(std::log(std::numbers::e + s));
  }

 private:
  double exponent_;
};

class ExpNode final : public RateNode {
 public:
  explicit ExpNode(double rate) : rate_(rate) {}
  double eval(double s) const override { return std::exp(rate_ * s); }
  double eval_log(double s) const override { return rate_ * s; }

 private:
  double rate_;
};

class SumNode final : public RateNode {
 public:
  SumNode(NodePtr a, NodePtr b) : a_(std::move(a)), b_(std::move(b)) {}
  double eval(double s) const override { return a_->eval(s) + b_->eval(s); }
  double eval_log(double s) const override {
    return log_add_exp(a_->eval_log(s), b_->eval_log(s));
  }

 private:
  NodePtr a_, b_;
};

class ProdNode final : public RateNode {
 public:
  ProdNode(NodePtr a, NodePtr b) : a_(std::move(a)), b_(std::move(b)) {}
  double eval(double s) const override { return a_->eval(s) * b_->eval(s); }
  double eval_log(double s) const override {
    return a_->eval_log(s) + b_->eval_log(s);
  }

 private:
  NodePtr a_, b_;
};

// M(s) (log(1+s) + log(1+K(s))); log(1+K) is taken from log K so a K that
// overflows in the linear domain still gives a finite factor.
class ComposeMkNode final : public RateNode {
 public:
  ComposeMkNode(NodePtr m, NodePtr k) : m_(std::move(m)), k_(std::move(k)) {}
  double eval(double s) const override { return m_->eval(s) * log_factor(s); }
  double eval_log(double s) const override {
    return m_->eval_log(s) + std::log(log_factor(s));
  }

 private:
  double log_factor(double s) const {
    return std::log1p(s) + softplus(k_->eval_log(s));
  }
  NodePtr m_, k_;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::pair<NodePtr, bool> parse() {
    auto result = parse_expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
    return result;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t'))
      ++pos_;
  }

  bool consume(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  double parse_positive() {
    skip_space();
    const std::size_t start = pos_;
    double value = 0.0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first)
      throw ParseError("expected a number", start);
    pos_ += static_cast<std::size_t>(ptr - first);
    if (!std::isfinite(value) || value <= 0.0)
      throw SemanticError("parameter must be a positive finite number", start);
    return value;
  }

  std::pair<NodePtr, bool> parse_expr() {
    skip_space();
    const std::size_t start = pos_;
    if (consume("sum(") || consume("prod(")) {
      const bool is_sum = text_[start] == 's';
      auto [a, a_strict] = parse_expr();
      expect(',');
      auto [b, b_strict] = parse_expr();
      expect(')');
      NodePtr node = is_sum ? NodePtr(std::make_shared<SumNode>(a, b))
                            : NodePtr(std::make_shared<ProdNode>(a, b));
      return {node, a_strict || b_strict};
    }
    if (consume("const:"))
      return {std::make_shared<ConstNode>(parse_positive()), false};
    if (consume("poly:")) return {std::make_shared<PolyNode>(parse_positive()), true};
    if (consume("logpow:"))
      return {std::make_shared<LogPowNode>(parse_positive()), true};
    if (consume("exp:")) return {std::make_shared<ExpNode>(parse_positive()), true};
    throw ParseError("expected const:, poly:, logpow:, exp:, sum( or prod(", start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RateFunction::RateFunction(std::shared_ptr<const detail::RateNode> root,
                           std::string source, bool strictly_increasing)
    : root_(std::move(root)),
      source_(std::move(source)),
      strictly_increasing_(strictly_increasing) {}

double RateFunction::eval(double s) const { return root_->eval(s); }

double RateFunction::eval_log(double s) const { return root_->eval_log(s); }

RateFunction parse_rate(std::string_view dsl) {
  auto [node, strict] = Parser(dsl).parse();
  return RateFunction(std::move(node), std::string(dsl), strict);
}

RateFunction compose_mk(const RateFunction& m, const RateFunction& k) {
  return RateFunction(std::make_shared<ComposeMkNode>(m.node(), k.node()),
                      "mk(" + m.source() + "," + k.source() + ")", true);
}

}  // namespace tauberkit
