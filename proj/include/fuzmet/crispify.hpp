#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fuzmet/crisp_metric.hpp"
#include "fuzmet/fuzzy_space.hpp"

namespace fuzmet {

// Upper lambda-metric: per pair, inf{t : M(x,y,t) > lambda}; zero diagonal.
// For spaces passing check_axioms the result is a genuine metric (a provable
// guarantee, judged post hoc by check_metric_axioms, not enforced here). Throws
// std::invalid_argument when some pair never exceeds lambda (possible only
// for profiles whose tail limit falls short of 1); black-box level failures
// propagate as LevelUnreachable.
CrispMetric upper_lambda_metric(const FuzzyMetricSpace& space, double lambda);

// Lower lambda-metric: per pair, sup{t >= 0 : M(x,y,t) < lambda}.
CrispMetric lower_lambda_metric(const FuzzyMetricSpace& space, double lambda);

// Level-set test for upper/lower agreement at one lambda in (0, 1): true iff
// {t : M(x,y,t) = lambda} has at most one element, which holds exactly when
// the two lambda-metrics coincide on the pair. The direct comparison is
// re-derived internally and a mismatch with the level-set verdict raises
// std::logic_error. Returns nullopt for black-box pairs (undecidable from
// point evaluations).
std::optional<bool> equality_at_lambda(const FuzzyMetricSpace& space, double lambda,
                                       const std::string& x, const std::string& y);

// Per-pair limit verdict: the lambda -> 1 limit of the lambda-metrics, or
// divergence when the pair never reaches membership 1.
struct LimitEntry {
  bool converged = false;
  double value = 0;  // meaningful only when converged
};

// The lambda -> 1 limit of both lambda-metric families. Exact backends decide
// convergence exactly: the limit is the left endpoint of the time set where
// the profile equals 1, recomputed independently from the below-1 supremum
// and asserted equal bitwise. Black-box pairs approximate the limit at
// lambda_star, declare divergence when the level cut exceeds cap, and assert
// upper/lower agreement within 1e-9 (falling back to the threshold search
// when lambda_star happens to hit a value plateau).
struct ActualMetric {
  std::size_t n = 0;
  std::vector<LimitEntry> entries;  // upper triangle, row-major
  double lambda_star = 0;
  double cap = 0;
  bool fd = false;                    // true iff every pair converged
  std::optional<CrispMetric> metric;  // present iff fd

  const LimitEntry& entry(std::size_t i, std::size_t j) const;
};

ActualMetric actual_metric(const FuzzyMetricSpace& space, double lambda_star = 1.0 - 1e-6,
                           double cap = 1e12);

// Both lambda-metric families over an ascending grid in (0, 1), their common
// limit, and entrywise verification of the order relations: lower <= upper at
// each lambda, both families nondecreasing in lambda, and upper at lambda_i
// <= lower at lambda_{i+1} (interleaving). `violation` holds the first
// violated inequality, empty when all hold.
struct LambdaSweep {
  std::vector<double> lambdas;
  std::vector<CrispMetric> upper;
  std::vector<CrispMetric> lower;
  ActualMetric limit;
  bool lower_le_upper = true;
  bool monotone = true;
  bool interleaved = true;
  std::string violation;
};

LambdaSweep lambda_sweep(const FuzzyMetricSpace& space, std::vector<double> lambdas);

// Scalar gauge on t >= 0 entering the generalized crossing metrics. The side
// conditions are the caller's declaration; check_* probes them on a grid.
struct MuProfile {
  std::function<double(double)> fn;
  std::string name;
};
struct AlphaProfile {
  std::function<double(double)> fn;
  std::string name;
};

struct ConditionCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

// mu conditions: mu(t) = 0 exactly at t = 0, and superadditivity
// mu(t+s) >= mu(t) + mu(s), probed on a fixed grid.
std::vector<ConditionCheck> check_mu_profile(const MuProfile& mu);

// alpha conditions: 0 < alpha(t) <= t on (0,1), alpha(t) > 1 for t > 1, and
// nondecreasing, probed on a fixed grid.
std::vector<ConditionCheck> check_alpha_profile(const AlphaProfile& alpha);

// The space-dependent implication for mu: whenever M(x,y,t) > 1 - mu(t) and
// M(y,z,s) > 1 - mu(s), also M(x,z,t+s) > 1 - mu(t+s); probed over the
// space's axiom time grid. Reported, not enforced: a failure means the
// mu-crossing values need not satisfy the triangle inequality.
std::vector<ConditionCheck> check_mu_space_condition(const MuProfile& mu,
                                                     const FuzzyMetricSpace& space,
                                                     const GridConfig& grid = {});

// Crossing metric: per pair, sup{t >= 0 : M(x,y,t) <= 1 - t}. The set lives
// inside [0, 1] (membership is nonnegative), so values never exceed 1.
CrispMetric radu_metric(const FuzzyMetricSpace& space);

// Generalized crossing against 1 - mu(t). Throws std::invalid_argument when
// the grid check of mu's side conditions fails.
CrispMetric radu_mu_metric(const FuzzyMetricSpace& space, const MuProfile& mu);

// Generalized crossing against 1 - alpha(t), with alpha's side conditions.
CrispMetric radu_alpha_metric(const FuzzyMetricSpace& space, const AlphaProfile& alpha);

}  // namespace fuzmet
