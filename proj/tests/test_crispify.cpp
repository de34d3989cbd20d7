#include <cmath>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "fuzmet/crispify.hpp"
#include "fuzmet/fuzzy_space.hpp"
#include "fuzmet/membership.hpp"
#include "fuzmet/numeric.hpp"
#include "fuzmet/point_set.hpp"

using namespace fuzmet;

namespace {

Membership staircase() {
  PiecewiseSpec s;
  s.segments = {{0.25, 0.0, 0.25}, {0.75, 0.5, 0.5}, {1.0, 0.75, 1.0}};
  s.tail = 1.0;
  return Membership::piecewise(s);
}

// Three points, every pair sharing one profile.
FuzzyMetricSpace uniform_space(const Membership& m) {
  PointSet pts = PointSet::from_labels({"p", "q", "r"});
  return build_space(pts, {{"p", "q", m}, {"q", "r", m}, {"p", "r", m}});
}

FuzzyMetricSpace two_point_space(const Membership& m) {
  PointSet pts = PointSet::from_labels({"x", "y"});
  return build_space(pts, {{"x", "y", m}});
}

}  // namespace

TEST_CASE("level-cut metrics of the staircase space take the plateau edges") {
  FuzzyMetricSpace s = uniform_space(staircase());
  CrispMetric up = upper_lambda_metric(s, 0.5);
  CrispMetric lo = lower_lambda_metric(s, 0.5);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(up.at(i, i) == 0.0);
    CHECK(lo.at(i, i) == 0.0);
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j) continue;
      CHECK(up.at(i, j) == 0.75);
      CHECK(lo.at(i, j) == 0.25);
    }
  }
  CHECK_THROWS_AS(upper_lambda_metric(s, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(upper_lambda_metric(s, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(lower_lambda_metric(s, -0.5), std::invalid_argument);
}

TEST_CASE("a pair that never clears the level reports which pair is stuck") {
  Membership stalled = Membership::piecewise({{{1.0, 0.0, 0.9}}, 0.9});
  FuzzyMetricSpace s = two_point_space(stalled);
  try {
    upper_lambda_metric(s, 0.95);
    FAIL("expected invalid_argument");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("no finite level cut") != std::string::npos);
  }
}

TEST_CASE("level equality matches the plateau picture at each lambda") {
  FuzzyMetricSpace s = uniform_space(staircase());
  CHECK(equality_at_lambda(s, 0.5, "p", "q") == std::optional<bool>(false));
  CHECK(equality_at_lambda(s, 0.25, "p", "q") == std::optional<bool>(true));
  CHECK(equality_at_lambda(s, 0.75, "q", "r") == std::optional<bool>(true));
  CHECK(equality_at_lambda(s, 0.9, "p", "r") == std::optional<bool>(true));
  // Diagonal: both cuts are zero at every lambda.
  CHECK(equality_at_lambda(s, 0.5, "p", "p") == std::optional<bool>(true));

  CHECK_THROWS_AS(equality_at_lambda(s, 0.5, "p", "nope"), std::invalid_argument);
  CHECK_THROWS_AS(equality_at_lambda(s, 0.0, "p", "q"), std::invalid_argument);

  FuzzyMetricSpace bb = two_point_space(
      Membership::black_box({[](double t) { return t / (t + 1.0); }}));
  CHECK_FALSE(equality_at_lambda(bb, 0.5, "x", "y").has_value());
}

TEST_CASE("the limit metric converges exactly for profiles reaching one") {
  FuzzyMetricSpace s = uniform_space(staircase());
  ActualMetric lim = actual_metric(s);
  CHECK(lim.fd);
  REQUIRE(lim.metric.has_value());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      CHECK(lim.entry(i, j).converged);
      CHECK(lim.entry(i, j).value == 1.0);
      CHECK(lim.metric->at(i, j) == 1.0);
    }
  CHECK_THROWS_AS(lim.entry(1, 1), std::logic_error);
}

TEST_CASE("the limit metric diverges when membership one is only a limit") {
  FuzzyMetricSpace s = uniform_space(Membership::rational({}));
  ActualMetric lim = actual_metric(s);
  CHECK_FALSE(lim.fd);
  CHECK_FALSE(lim.metric.has_value());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) CHECK_FALSE(lim.entry(i, j).converged);
}

TEST_CASE("the limit metric validates its parameters") {
  FuzzyMetricSpace s = uniform_space(staircase());
  CHECK_THROWS_AS(actual_metric(s, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(actual_metric(s, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(actual_metric(s, 0.5, -1.0), std::invalid_argument);
}

TEST_CASE("a non-monotone profile is rejected when the two limit branches disagree") {
  // Climbs to 1 at t = 1, then drops back to 1/2: the first time reaching 1
  // and the last time below 1 no longer coincide.
  PiecewiseSpec p;
  p.segments = {{1.0, 0.0, 1.0}, {2.0, 0.5, 0.5}};
  p.tail = 1.0;
  FuzzyMetricSpace s = two_point_space(Membership::piecewise(p));
  CHECK_THROWS_AS(actual_metric(s), std::invalid_argument);
}

TEST_CASE("black-box pairs converge or diverge by the numeric cap") {
  FuzzyMetricSpace ramp = two_point_space(
      Membership::black_box({[](double t) { return std::min(t, 1.0); }}));
  ActualMetric lim = actual_metric(ramp);
  CHECK(lim.fd);
  CHECK(lim.entry(0, 1).converged);
  CHECK(std::abs(lim.entry(0, 1).value - 1.0) <= 1e-5);

  // The same profile squeezed through a tiny cap: the level cut at
  // lambda-star escapes the cap, so the pair is declared divergent.
  FuzzyMetricSpace slow = two_point_space(
      Membership::black_box({[](double t) { return t / (t + 1.0); }}));
  ActualMetric capped = actual_metric(slow, 1.0 - 1e-6, 100.0);
  CHECK_FALSE(capped.fd);
  CHECK_FALSE(capped.entry(0, 1).converged);
}

TEST_CASE("the lambda sweep reports both families in order") {
  FuzzyMetricSpace s = uniform_space(staircase());
  LambdaSweep sweep = lambda_sweep(s, {0.2, 0.5, 0.8});
  CHECK(sweep.lower_le_upper);
  CHECK(sweep.monotone);
  CHECK(sweep.interleaved);
  CHECK(sweep.violation.empty());
  REQUIRE(sweep.upper.size() == 3);
  CHECK(sweep.upper[0].at(0, 1) == 0.2);
  CHECK(sweep.lower[0].at(0, 1) == 0.2);
  CHECK(sweep.upper[1].at(0, 1) == 0.75);
  CHECK(sweep.lower[1].at(0, 1) == 0.25);
  CHECK(sweep.upper[2].at(0, 1) == 0.8);
  CHECK(sweep.limit.fd);

  LambdaSweep slow = lambda_sweep(uniform_space(Membership::rational({})), {0.25, 0.75});
  CHECK(slow.lower_le_upper);
  CHECK(slow.monotone);
  CHECK(slow.interleaved);
  CHECK_FALSE(slow.limit.fd);
}

TEST_CASE("the lambda sweep validates its grid") {
  FuzzyMetricSpace s = uniform_space(staircase());
  CHECK_THROWS_AS(lambda_sweep(s, {}), std::invalid_argument);
  CHECK_THROWS_AS(lambda_sweep(s, {0.5, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(lambda_sweep(s, {0.8, 0.2}), std::invalid_argument);
  CHECK_THROWS_AS(lambda_sweep(s, {0.0, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(lambda_sweep(s, {0.5, 1.0}), std::invalid_argument);
}

TEST_CASE("gauge conditions hold for admissible mu gauges") {
  std::vector<MuProfile> gauges;
  gauges.push_back({[](double t) { return t; }, "identity"});
  gauges.push_back({[](double t) { return 2.0 * t; }, "double"});
  gauges.push_back({[](double t) { return t * t; }, "square"});
  for (const auto& mu : gauges) {
    auto checks = check_mu_profile(mu);
    for (const auto& c : checks) CHECK_MESSAGE(c.passed, mu.name, " ", c.name, ": ", c.detail);
  }
}

TEST_CASE("gauge conditions reject inadmissible mu gauges") {
  auto sqrt_checks = check_mu_profile({[](double t) { return std::sqrt(t); }, "sqrt"});
  bool super_failed = false;
  for (const auto& c : sqrt_checks)
    if (c.name == "mu-superadditive" && !c.passed) super_failed = true;
  CHECK(super_failed);

  auto shifted = check_mu_profile({[](double t) { return t + 0.1; }, "shifted"});
  bool zero_failed = false;
  for (const auto& c : shifted)
    if (c.name == "mu-zero-iff-zero" && !c.passed) zero_failed = true;
  CHECK(zero_failed);
}

TEST_CASE("gauge conditions classify alpha gauges") {
  AlphaProfile ok{[](double t) { return t <= 1.0 ? t / 2.0 : 2.0 * t; }, "half-then-double"};
  for (const auto& c : check_alpha_profile(ok)) CHECK_MESSAGE(c.passed, c.name, ": ", c.detail);

  AlphaProfile too_big{[](double t) { return 2.0 * t; }, "double"};
  bool bounded_failed = false;
  for (const auto& c : check_alpha_profile(too_big))
    if (c.name == "alpha-bounded-on-unit" && !c.passed) bounded_failed = true;
  CHECK(bounded_failed);

  AlphaProfile stunted{[](double t) { return t <= 1.0 ? t / 2.0 : 0.9; }, "stunted"};
  bool beyond_failed = false;
  for (const auto& c : check_alpha_profile(stunted))
    if (c.name == "alpha-exceeds-one-beyond" && !c.passed) beyond_failed = true;
  CHECK(beyond_failed);
}

TEST_CASE("crossing metric hits the balance point of each profile") {
  // Step profiles: the crossing is the jump point, capped at 1.
  CHECK(radu_metric(two_point_space(Membership::step_at(0.4))).at(0, 1) == 0.4);
  CHECK(radu_metric(two_point_space(Membership::step_at(3.0))).at(0, 1) == 1.0);

  // Staircase: membership 1/2 meets 1 - t at t = 1/2.
  CrispMetric r = radu_metric(uniform_space(staircase()));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) CHECK(r.at(i, j) == 0.5);

  // t/(t+1) meets 1 - t where t^2 + t - 1 = 0.
  double golden = (std::sqrt(5.0) - 1.0) / 2.0;
  double v = radu_metric(two_point_space(Membership::rational({}))).at(0, 1);
  CHECK(std::abs(v - golden) <= 1e-12);
}

TEST_CASE("the identity gauge reproduces the plain crossing metric bitwise") {
  FuzzyMetricSpace s = uniform_space(staircase());
  CrispMetric plain = radu_metric(s);
  CrispMetric gauged = radu_mu_metric(s, {[](double t) { return t; }, "identity"});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(plain.at(i, j) == gauged.at(i, j));
}

TEST_CASE("gauged crossings move with the gauge") {
  FuzzyMetricSpace s = two_point_space(Membership::rational({}));
  // t/(t+1) meets 1 - 2t where 2t^2 + 2t - 1 = 0.
  double expected = (std::sqrt(3.0) - 1.0) / 2.0;
  double v = radu_mu_metric(s, {[](double t) { return 2.0 * t; }, "double"}).at(0, 1);
  CHECK(std::abs(v - expected) <= 1e-12);

  // Alpha gauge t/2 below 1: the crossing of t/(t+1) against 1 - t/2 sits
  // exactly at t = 1, where both sides equal 1/2.
  AlphaProfile alpha{[](double t) { return t <= 1.0 ? t / 2.0 : 2.0 * t; }, "half-then-double"};
  CHECK(radu_alpha_metric(s, alpha).at(0, 1) == 1.0);
}

TEST_CASE("inadmissible gauges are rejected with the failing condition named") {
  FuzzyMetricSpace s = two_point_space(Membership::rational({}));
  try {
    radu_mu_metric(s, {[](double t) { return std::sqrt(t); }, "sqrt"});
    FAIL("expected invalid_argument");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("mu-superadditive") != std::string::npos);
  }
  CHECK_THROWS_AS(radu_alpha_metric(s, {[](double t) { return 2.0 * t; }, "double"}),
                  std::invalid_argument);
}

TEST_CASE("the space-level gauge implication is reported, not enforced") {
  MuProfile identity{[](double t) { return t; }, "identity"};

  // Step-profile space over a genuine metric: the implication holds.
  PointSet pts = PointSet::from_labels({"a", "b", "c"});
  FuzzyMetricSpace good = build_space(pts, {{"a", "b", Membership::step_at(1.0)},
                                            {"b", "c", Membership::step_at(2.0)},
                                            {"a", "c", Membership::step_at(3.0)}});
  for (const auto& c : check_mu_space_condition(identity, good))
    CHECK_MESSAGE(c.passed, c.name, ": ", c.detail);

  // Two short hops wildly out of line with the long pair: the implication
  // fails and the witness names the offending triple.
  FuzzyMetricSpace bad = build_space(pts, {{"a", "b", Membership::step_at(0.01)},
                                           {"b", "c", Membership::step_at(0.01)},
                                           {"a", "c", Membership::step_at(0.9)}});
  auto checks = check_mu_space_condition(identity, bad);
  bool failed = false;
  for (const auto& c : checks) {
    if (c.name == "mu-space-implication" && !c.passed) {
      failed = true;
      CHECK_FALSE(c.detail.empty());
    }
  }
  CHECK(failed);
}
