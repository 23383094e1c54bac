#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <limits>

#include "tauberkit/errors.hpp"
#include "tauberkit/growth_checks.hpp"
#include "tauberkit/inversion.hpp"
#include "tauberkit/rate_function.hpp"
#include "tauberkit/region.hpp"

using namespace tauberkit;

TEST(ParseRate, ConstantIsFlat) {
  const auto f = parse_rate("const:1");
  for (double s : {0.0, 1.0, 1e6}) EXPECT_DOUBLE_EQ(f(s), 1.0);
  EXPECT_FALSE(f.strictly_increasing());
}

TEST(ParseRate, PolyShiftsByOne) {
  EXPECT_DOUBLE_EQ(parse_rate("poly:2")(5.0), 36.0);
  EXPECT_TRUE(parse_rate("poly:2").strictly_increasing());
}

TEST(ParseRate, ProductAtZero) { EXPECT_DOUBLE_EQ(parse_rate("prod(poly:1,exp:0.5)")(0.0), 1.0); }

TEST(ParseRate, LogpowAndSum) {
  EXPECT_NEAR(parse_rate("logpow:2")(0.0), 1.0, 1e-15);
  EXPECT_NEAR(parse_rate("sum(const:2, poly:1)")(3.0), 6.0, 1e-14);
  EXPECT_TRUE(parse_rate("sum(const:2,poly:1)").strictly_increasing());
  EXPECT_FALSE(parse_rate("prod(const:2,const:3)").strictly_increasing());
}

TEST(ParseRate, LogEvaluationSurvivesOverflow) {
  const auto f = parse_rate("exp:1");
  EXPECT_TRUE(std::isinf(f.eval(1e4)));
  EXPECT_DOUBLE_EQ(f.eval_log(1e4), 1e4);
}

TEST(ParseRate, SyntaxErrorsReportPosition) {
  try {
    parse_rate("poly:1)");
    FAIL();
  } catch (const SemanticError&) {
    FAIL() << "syntax error expected";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
  EXPECT_THROW(parse_rate(""), ParseError);
  EXPECT_THROW(parse_rate("poly"), ParseError);
  EXPECT_THROW(parse_rate("sum(poly:1)"), ParseError);
  EXPECT_THROW(parse_rate("quux:1"), ParseError);
}

TEST(ParseRate, NonPositiveParametersAreSemanticErrors) {
  EXPECT_THROW(parse_rate("poly:-1"), SemanticError);
  EXPECT_THROW(parse_rate("const:0"), SemanticError);
  EXPECT_THROW(parse_rate("exp:nan"), ParseError);
}

TEST(ComposeMk, ClosedForms) {
  const auto one = parse_rate("const:1");
  EXPECT_NEAR(compose_mk(one, one)(0.0), std::log(2.0), 1e-15);
  const auto p1 = parse_rate("poly:1");
  EXPECT_NEAR(compose_mk(p1, p1)(1.0), 2.0 * std::log(6.0), 1e-14);
  const auto p2 = parse_rate("poly:2");
  // 121 (log 11 + log 122), 30-digit reference.
  EXPECT_NEAR(compose_mk(p2, p2)(10.0), 871.431874421326879369898341145, 1e-11);
}

TEST(ComposeMk, LogDomainAgreesWhereBothFinite) {
  const auto mk = compose_mk(parse_rate("exp:1"), parse_rate("exp:2"));
  for (double s : {0.0, 1.0, 10.0, 100.0})
    EXPECT_NEAR(mk.eval_log(s), std::log(mk.eval(s)), 1e-12 * (1.0 + s));
  EXPECT_TRUE(std::isfinite(mk.eval_log(1e5)));
}

TEST(RightInverse, Examples) {
  EXPECT_NEAR(right_inverse(parse_rate("poly:1"), 101.0), 100.0, 1e-9);
  EXPECT_EQ(right_inverse(parse_rate("const:5"), 3.0), 0.0);
  const auto p1 = parse_rate("poly:1");
  EXPECT_NEAR(right_inverse(compose_mk(p1, p1), 2.0 * std::log(6.0)), 1.0, 1e-9);
}

TEST(RightInverse, BoundedFunctionThrows) {
  EXPECT_THROW(right_inverse(parse_rate("const:5"), 6.0), UnboundedSearchError);
}

TEST(RightInverse, IsMinimal) {
  const auto f = parse_rate("logpow:2");
  for (double t : {2.0, 10.0, 1e3}) {
    const double s = right_inverse(f, t);
    EXPECT_GE(f(s), t);
    EXPECT_LT(f(s * (1.0 - 1e-11)), t);
  }
}

TEST(PredictedRate, Examples) {
  const auto p1 = parse_rate("poly:1");
  EXPECT_NEAR(predicted_rate(p1, p1, 1.0, 2.0 * std::log(6.0)), 1.0, 1e-9);
  EXPECT_THROW(predicted_rate(p1, p1, 1.0, 0.1), DegenerateRateError);
  EXPECT_THROW(predicted_rate(p1, p1, 0.0, 10.0), PreconditionError);
}

TEST(PredictedRate, PolynomialAsymptoticAlphaTwo) {
  const auto p2 = parse_rate("poly:2");
  const double t = 1e8;
  const double inverse = 1.0 / predicted_rate(p2, p2, 1.0, t);
  const double asymptotic = std::sqrt(2.0 * t / (3.0 * std::log(t)));
  EXPECT_NEAR(inverse / asymptotic, 1.0, 0.15);
}

TEST(RegularGrowth, Examples) {
  EXPECT_TRUE(regular_growth_check(parse_rate("const:1"), 0.5,
                                   GridAxis::linear("s", 0, 10, 11)).pass);
  const auto e = parse_rate("exp:1");
  const auto ok = regular_growth_check(e, 0.2, GridAxis::linear("s", 0, 10, 101));
  EXPECT_TRUE(ok.pass);
  EXPECT_NEAR(ok.extremum, 0.2 * std::exp(0.2), 1e-12);
  const auto bad = regular_growth_check(e, 0.99, GridAxis::linear("s", 0, 10, 101));
  EXPECT_FALSE(bad.pass);
  EXPECT_NEAR(bad.extremum, 0.99 * std::exp(0.99), 1e-12);
  EXPECT_EQ(bad.property_id, "reg-growth");
}

TEST(Condition13, Examples) {
  const auto p2 = parse_rate("poly:2");
  EXPECT_TRUE(condition_13_check(p2, p2, 0.5, GridAxis::log("s", 10, 1e6, 100)).pass);
  const auto fail = condition_13_check(parse_rate("const:1"), parse_rate("exp:1"), 0.5,
                                       GridAxis::linear("s", 10, 100, 91));
  EXPECT_FALSE(fail.pass);
  const auto vacuous = condition_13_check(p2, parse_rate("const:1"), 0.5,
                                          GridAxis::linear("s", 10, 100, 10));
  EXPECT_TRUE(vacuous.pass);
  EXPECT_EQ(vacuous.details["compared_points"], 0);
}

TEST(ExpGrowth, Examples) {
  const auto grid = GridAxis::linear("s", 0, 100, 201);
  EXPECT_TRUE(exp_growth_check(parse_rate("poly:3"), 1.0, grid).pass);
  EXPECT_FALSE(exp_growth_check(parse_rate("exp:2"), 1.0, grid).pass);
  const auto eq = exp_growth_check(parse_rate("exp:1"), 1.0, grid);
  EXPECT_TRUE(eq.pass);
  EXPECT_NEAR(eq.extremum, 0.0, 1e-12);
}

TEST(BoundedAbove, TailAgainstHead) {
  const double rising[] = {0, 1, 2, 3, 4, 5, 6, 7};
  EXPECT_FALSE(bounded_above(rising).bounded);
  const double falling[] = {3, 2, 1, 0, -1, -2, -3, -4};
  EXPECT_TRUE(bounded_above(falling).bounded);
}

TEST(Region, Examples) {
  const auto one = parse_rate("const:1");
  EXPECT_TRUE(region_contains(RegionSpec::omega(one), {-0.5, 0.0}));
  EXPECT_FALSE(region_contains(RegionSpec::omega(one), {-1.5, 0.0}));
  EXPECT_TRUE(region_contains(RegionSpec::omega(one, 2.0), {-0.4, 0.0}));
  EXPECT_FALSE(region_contains(RegionSpec::omega(one, 2.0), {-0.6, 0.0}));
  EXPECT_FALSE(region_contains(RegionSpec::strip(1, 2.0), {1.0, 0.0}));
  EXPECT_TRUE(region_contains(RegionSpec::strip(1, 2.0), {0.72, 5.0}));
  EXPECT_TRUE(region_contains(RegionSpec::omega_prime(one), {0.5, 3.0}));
  EXPECT_FALSE(region_contains(RegionSpec::disc_of(1.0), {0.8, 0.8}));
}

TEST(Region, ConjugationSymmetry) {
  const auto p1 = parse_rate("poly:1");
  const RegionSpec regions[] = {RegionSpec::omega(p1), RegionSpec::omega_prime(p1),
                                RegionSpec::strip(8, 1.0), RegionSpec::disc_of(0.5)};
  for (const auto& r : regions)
    for (double x = -1.0; x <= 1.0; x += 0.125)
      for (double y = -3.0; y <= 3.0; y += 0.25) {
        const std::complex<double> z(x, y);
        EXPECT_EQ(region_contains(r, z), region_contains(r, std::conj(z)));
      }
}
