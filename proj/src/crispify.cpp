#include "fuzmet/crispify.hpp"

#include <cmath>
#include <stdexcept>

#include "fuzmet/numeric.hpp"

namespace fuzmet {

namespace {

void validate_unit_open(double lambda, const char* what) {
  if (!(lambda > 0) || !(lambda < 1))
    throw std::invalid_argument(std::string(what) + " must lie strictly inside (0, 1)");
}

std::string pair_name(const PointSet& ps, std::size_t i, std::size_t j) {
  return "(" + ps.labels[i] + ", " + ps.labels[j] + ")";
}

CrispMetric level_metric(const FuzzyMetricSpace& space, double lambda, bool upper) {
  validate_unit_open(lambda, "lambda");
  std::size_t n = space.size();
  std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Membership& m = space.pair(i, j);
      double v = upper ? m.level_inf(lambda) : m.level_sup(lambda);
      if (!std::isfinite(v))
        throw std::invalid_argument("pair " + pair_name(space.points(), i, j) +
                                    " has no finite level cut at lambda=" +
                                    format_double(lambda) +
                                    ": the profile's tail limit falls short of 1");
      rows[i][j] = rows[j][i] = v;
    }
  }
  return CrispMetric(space.points(), std::move(rows));
}

}  // namespace

CrispMetric upper_lambda_metric(const FuzzyMetricSpace& space, double lambda) {
  return level_metric(space, lambda, true);
}

CrispMetric lower_lambda_metric(const FuzzyMetricSpace& space, double lambda) {
  return level_metric(space, lambda, false);
}

std::optional<bool> equality_at_lambda(const FuzzyMetricSpace& space, double lambda,
                                       const std::string& x, const std::string& y) {
  validate_unit_open(lambda, "lambda");
  auto xi = space.points().index_of(x);
  auto yi = space.points().index_of(y);
  if (!xi) throw std::invalid_argument("unknown point label \"" + x + "\"");
  if (!yi) throw std::invalid_argument("unknown point label \"" + y + "\"");
  if (*xi == *yi) return true;  // both lambda-metrics vanish on the diagonal
  const Membership& m = space.pair(*xi, *yi);
  if (!m.is_exact()) return std::nullopt;
  bool verdict = m.plateau(lambda).at_most_one();
  bool direct = m.level_inf(lambda) == m.level_sup(lambda);
  if (verdict != direct)
    throw std::logic_error("level-set verdict and direct comparison disagree for pair (" + x +
                           ", " + y + ") at lambda=" + format_double(lambda));
  return verdict;
}

const LimitEntry& ActualMetric::entry(std::size_t i, std::size_t j) const {
  if (i == j) throw std::logic_error("the diagonal has no limit entry; its value is 0");
  if (i > j) std::swap(i, j);
  return entries[i * (2 * n - i - 1) / 2 + (j - i - 1)];
}

namespace {

LimitEntry pair_limit(const Membership& m, double lambda_star, double cap) {
  OneThreshold ot = m.one_threshold();
  if (!ot.finite) return {false, 0};
  if (m.is_exact()) {
    double low = m.sup_below_one();
    if (low != ot.t_star)
      throw std::invalid_argument(
          "the threshold inf and the below-1 sup disagree (" + format_double(ot.t_star) +
          " vs " + format_double(low) + "); the profile is not nondecreasing");
    return {true, ot.t_star};
  }
  double u, l;
  try {
    u = m.level_inf(lambda_star);
    l = m.level_sup(lambda_star);
  } catch (const LevelUnreachable&) {
    return {false, 0};
  }
  if (u > cap || l > cap) return {false, 0};
  if (std::abs(u - l) <= 1e-9) return {true, u};
  // lambda_star fell onto a value plateau; the threshold searches still agree
  // when the profile genuinely reaches 1.
  double low = m.sup_below_one();
  if (std::isfinite(low) && std::abs(ot.t_star - low) <= 1e-9 && ot.t_star <= cap)
    return {true, ot.t_star};
  return {false, 0};
}

}  // namespace

ActualMetric actual_metric(const FuzzyMetricSpace& space, double lambda_star, double cap) {
  validate_unit_open(lambda_star, "lambda_star");
  if (!std::isfinite(cap) || cap <= 0) throw std::invalid_argument("cap must be positive");
  ActualMetric out;
  out.n = space.size();
  out.lambda_star = lambda_star;
  out.cap = cap;
  out.fd = true;
  std::size_t n = space.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      LimitEntry e;
      try {
        e = pair_limit(space.pair(i, j), lambda_star, cap);
      } catch (const std::invalid_argument& err) {
        throw std::invalid_argument("pair " + pair_name(space.points(), i, j) + ": " +
                                    err.what());
      }
      if (!e.converged) out.fd = false;
      out.entries.push_back(e);
    }
  }
  if (out.fd) {
    std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) rows[i][j] = rows[j][i] = out.entries[idx++].value;
    out.metric = CrispMetric(space.points(), std::move(rows));
  }
  return out;
}

LambdaSweep lambda_sweep(const FuzzyMetricSpace& space, std::vector<double> lambdas) {
  if (lambdas.empty()) throw std::invalid_argument("lambda grid must be nonempty");
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    validate_unit_open(lambdas[k], "every lambda grid point");
    if (k > 0 && lambdas[k] <= lambdas[k - 1])
      throw std::invalid_argument("lambda grid must be strictly ascending");
  }
  LambdaSweep sw;
  sw.lambdas = std::move(lambdas);
  for (double l : sw.lambdas) {
    sw.upper.push_back(upper_lambda_metric(space, l));
    sw.lower.push_back(lower_lambda_metric(space, l));
  }
  sw.limit = actual_metric(space);

  const auto& ps = space.points();
  std::size_t n = space.size();
  auto note = [&](std::string msg) {
    if (sw.violation.empty()) sw.violation = std::move(msg);
  };
  for (std::size_t k = 0; k < sw.lambdas.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (sw.lower[k].at(i, j) > sw.upper[k].at(i, j)) {
          sw.lower_le_upper = false;
          note("lower > upper for pair " + pair_name(ps, i, j) + " at lambda=" +
               format_double(sw.lambdas[k]) + ": " + format_double(sw.lower[k].at(i, j)) +
               " > " + format_double(sw.upper[k].at(i, j)));
        }
        if (k + 1 < sw.lambdas.size()) {
          if (sw.upper[k].at(i, j) > sw.upper[k + 1].at(i, j) ||
              sw.lower[k].at(i, j) > sw.lower[k + 1].at(i, j)) {
            sw.monotone = false;
            note("lambda-monotonicity fails for pair " + pair_name(ps, i, j) + " between " +
                 format_double(sw.lambdas[k]) + " and " + format_double(sw.lambdas[k + 1]));
          }
          if (sw.upper[k].at(i, j) > sw.lower[k + 1].at(i, j)) {
            sw.interleaved = false;
            note("interleaving fails for pair " + pair_name(ps, i, j) + ": upper at " +
                 format_double(sw.lambdas[k]) + " is " + format_double(sw.upper[k].at(i, j)) +
                 " > lower at " + format_double(sw.lambdas[k + 1]) + " which is " +
                 format_double(sw.lower[k + 1].at(i, j)));
          }
        }
      }
    }
  }
  return sw;
}

// --- crossing metrics -----------------------------------------------------

namespace {

constexpr double kCrossingCap = 1e12;

const std::vector<double>& gauge_grid() {
  static const std::vector<double> g = {0.0,  1e-9, 1e-6, 1e-3, 0.01, 0.0625, 0.1,  0.125,
                                        0.25, 0.3,  0.5,  0.7,  0.75, 1.0,    1.5,  2.0,
                                        3.0,  5.0,  10.0};
  return g;
}

CrispMetric crossing_metric_impl(const FuzzyMetricSpace& space,
                                 const std::function<double(double)>& g) {
  std::size_t n = space.size();
  std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Membership& m = space.pair(i, j);
      double v = sup_down_closed([&](double t) { return m.eval(t) <= 1.0 - g(t); },
                                 kCrossingCap);
      if (!std::isfinite(v))
        throw std::invalid_argument("crossing for pair " + pair_name(space.points(), i, j) +
                                    " exceeds the search cap; the gauge never dominates the "
                                    "profile");
      rows[i][j] = rows[j][i] = v;
    }
  }
  return CrispMetric(space.points(), std::move(rows));
}

void enforce(const std::vector<ConditionCheck>& checks, const std::string& who) {
  for (const auto& c : checks)
    if (!c.passed)
      throw std::invalid_argument(who + " fails condition \"" + c.name + "\": " + c.detail);
}

}  // namespace

std::vector<ConditionCheck> check_mu_profile(const MuProfile& mu) {
  if (!mu.fn)
    return {{"mu-callable", false, "no function supplied"}};
  const auto& G = gauge_grid();
  ConditionCheck zero{"mu-zero-iff-zero", true, ""};
  if (mu.fn(0.0) != 0.0) {
    zero.passed = false;
    zero.detail = "mu(0) = " + format_double(mu.fn(0.0)) + ", expected 0";
  } else {
    for (double t : G) {
      if (t > 0 && mu.fn(t) <= 0) {
        zero.passed = false;
        zero.detail = "mu(" + format_double(t) + ") = " + format_double(mu.fn(t)) +
                      " is not positive";
        break;
      }
    }
  }
  if (zero.passed) zero.detail = "mu(0)=0 and mu>0 at all positive grid points";

  ConditionCheck super{"mu-superadditive", true, ""};
  for (double s : G) {
    for (double t : G) {
      if (mu.fn(s + t) < mu.fn(s) + mu.fn(t)) {
        super.passed = false;
        super.detail = "mu(" + format_double(s) + " + " + format_double(t) + ") = " +
                       format_double(mu.fn(s + t)) + " < " +
                       format_double(mu.fn(s) + mu.fn(t));
        break;
      }
    }
    if (!super.passed) break;
  }
  if (super.passed)
    super.detail = "mu(s+t) >= mu(s) + mu(t) on all grid pairs";
  return {zero, super};
}

std::vector<ConditionCheck> check_alpha_profile(const AlphaProfile& alpha) {
  if (!alpha.fn)
    return {{"alpha-callable", false, "no function supplied"}};
  static const std::vector<double> unit = {0.01, 0.03125, 0.0625, 0.1,   0.125, 0.2,  0.25,
                                           0.375, 0.5,    0.625,  0.75,  0.875, 0.9375,
                                           0.99};
  static const std::vector<double> beyond = {1.0625, 1.25, 1.5, 2.0, 3.0, 5.0, 10.0};

  ConditionCheck bounded{"alpha-bounded-on-unit", true, ""};
  for (double t : unit) {
    double a = alpha.fn(t);
    if (!(a > 0) || a > t) {
      bounded.passed = false;
      bounded.detail = "alpha(" + format_double(t) + ") = " + format_double(a) +
                       " violates 0 < alpha(t) <= t";
      break;
    }
  }
  if (bounded.passed) bounded.detail = "0 < alpha(t) <= t at all grid points in (0, 1)";

  ConditionCheck exceeds{"alpha-exceeds-one-beyond", true, ""};
  for (double t : beyond) {
    if (!(alpha.fn(t) > 1)) {
      exceeds.passed = false;
      exceeds.detail = "alpha(" + format_double(t) + ") = " + format_double(alpha.fn(t)) +
                       " is not above 1";
      break;
    }
  }
  if (exceeds.passed) exceeds.detail = "alpha(t) > 1 at all grid points above 1";

  ConditionCheck inc{"alpha-nondecreasing", true, ""};
  std::vector<double> chain = unit;
  chain.push_back(1.0);
  chain.insert(chain.end(), beyond.begin(), beyond.end());
  for (std::size_t k = 1; k < chain.size(); ++k) {
    if (alpha.fn(chain[k]) < alpha.fn(chain[k - 1])) {
      inc.passed = false;
      inc.detail = "alpha decreases between t=" + format_double(chain[k - 1]) + " and t=" +
                   format_double(chain[k]);
      break;
    }
  }
  if (inc.passed) inc.detail = "nondecreasing across the grid";
  return {bounded, exceeds, inc};
}

std::vector<ConditionCheck> check_mu_space_condition(const MuProfile& mu,
                                                     const FuzzyMetricSpace& space,
                                                     const GridConfig& grid) {
  if (!mu.fn)
    return {{"mu-callable", false, "no function supplied"}};
  ConditionCheck c{"mu-space-implication", true, ""};
  std::vector<double> G = axiom_time_grid(space, grid);
  std::vector<double> muv(G.size());
  for (std::size_t a = 0; a < G.size(); ++a) muv[a] = mu.fn(G[a]);
  std::size_t n = space.size();
  std::size_t violations = 0, antecedents = 0;
  // Swapping x and z together with t and s mirrors the implication, so
  // unordered {x, z} suffices under the symmetric probe product.
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t z = x + 1; z < n; ++z) {
      for (std::size_t y = 0; y < n; ++y) {
        if (y == x || y == z) continue;
        for (std::size_t a = 0; a < G.size(); ++a) {
          if (G[a] <= 0) continue;
          if (!(space.eval(x, y, G[a]) > 1.0 - muv[a])) continue;
          for (std::size_t b = 0; b < G.size(); ++b) {
            if (G[b] <= 0) continue;
            if (!(space.eval(y, z, G[b]) > 1.0 - muv[b])) continue;
            ++antecedents;
            double ts = G[a] + G[b];
            if (!(space.eval(x, z, ts) > 1.0 - mu.fn(ts))) {
              if (violations == 0) {
                c.passed = false;
                c.detail = "implication fails for (" + space.points().labels[x] + ", " +
                           space.points().labels[y] + ", " + space.points().labels[z] +
                           ") at t=" + format_double(G[a]) + ", s=" + format_double(G[b]);
              }
              ++violations;
            }
          }
        }
      }
    }
  }
  if (c.passed) {
    c.detail = "implication holds at all " + std::to_string(antecedents) +
               " grid instantiations with true antecedents";
  } else {
    c.detail += "; " + std::to_string(violations) + " violation(s)";
  }
  return {c};
}

CrispMetric radu_metric(const FuzzyMetricSpace& space) {
  return crossing_metric_impl(space, [](double t) { return t; });
}

CrispMetric radu_mu_metric(const FuzzyMetricSpace& space, const MuProfile& mu) {
  enforce(check_mu_profile(mu), "mu profile \"" + mu.name + "\"");
  return crossing_metric_impl(space, mu.fn);
}

CrispMetric radu_alpha_metric(const FuzzyMetricSpace& space, const AlphaProfile& alpha) {
  enforce(check_alpha_profile(alpha), "alpha profile \"" + alpha.name + "\"");
  return crossing_metric_impl(space, alpha.fn);
}

}  // namespace fuzmet
