#include "fuzmet/fuzzify.hpp"

#include <cmath>
#include <stdexcept>

namespace fuzmet {

namespace {

void require_metric(const CrispMetric& d, double slack, const char* who) {
  AxiomReport rep = check_metric_axioms(d, slack);
  if (!rep.axioms_hold()) {
    std::optional<AxiomCheck> bad = rep.first_failure();
    throw std::invalid_argument(std::string(who) + ": input is not a metric (" +
                                std::string(axiom_name(bad->axiom)) + " fails: " +
                                bad->witness + ")");
  }
}

}  // namespace

FuzzyMetricSpace indicator_fuzzify(const CrispMetric& d, double slack) {
  require_metric(d, slack, "indicator_fuzzify");
  std::size_t n = d.points().size();
  std::vector<Membership> upper;
  upper.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) upper.push_back(Membership::step_at(d.at(i, j)));
  return FuzzyMetricSpace(d.points(), std::move(upper));
}

FuzzyMetricSpace mnk_fuzzify(const CrispMetric& d, double m, double n, double k,
                             double slack) {
  if (!(m > 0) || !std::isfinite(m) || !(n > 0) || !std::isfinite(n) || !(k > 0) ||
      !std::isfinite(k))
    throw std::invalid_argument("mnk_fuzzify: m, n, k must be positive and finite");
  require_metric(d, slack, "mnk_fuzzify");
  std::size_t sz = d.points().size();
  std::vector<Membership> upper;
  upper.reserve(sz * (sz - 1) / 2);
  for (std::size_t i = 0; i < sz; ++i) {
    for (std::size_t j = i + 1; j < sz; ++j) {
      RationalSpec spec;
      spec.m = m;
      spec.n = n;
      spec.k = k;
      spec.c = d.at(i, j);
      spec.scale = 1.0;
      upper.push_back(Membership::rational(spec));
    }
  }
  return FuzzyMetricSpace(d.points(), std::move(upper));
}

}  // namespace fuzmet
