#pragma once

#include "fuzmet/crisp_metric.hpp"
#include "fuzmet/fuzzy_space.hpp"

namespace fuzmet {

// Indicator fuzzification: each off-diagonal pair becomes the {0,1}-valued
// step profile that jumps strictly above d(x, y) — value 0 on (-inf, d] and
// 1 on (d, inf). The result satisfies every axiom including SDP and FD, and
// both lambda-metrics of the result reproduce d exactly at every lambda.
//
// `slack` is the triangle tolerance forwarded to the input validation; keep
// it 0 for exactly-constructed metrics and widen it only for matrices that
// went through numeric limits.
FuzzyMetricSpace indicator_fuzzify(const CrispMetric& d, double slack = 0.0);

// Rational fuzzification: each off-diagonal pair becomes the uncapped profile
// k*t^n / (k*t^n + m*d(x, y)). Satisfies KM1-KM5 and SDP but never FD: the
// value 1 is only a limit, so the actual metric diverges on every pair.
FuzzyMetricSpace mnk_fuzzify(const CrispMetric& d, double m, double n, double k,
                             double slack = 0.0);

}  // namespace fuzmet
