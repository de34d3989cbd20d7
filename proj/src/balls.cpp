#include "fuzmet/balls.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "fuzmet/crispify.hpp"
#include "fuzmet/numeric.hpp"

namespace fuzmet {

std::vector<std::string> crisp_ball(const CrispMetric& d, const std::string& x, double s) {
  if (!(s > 0)) throw std::invalid_argument("ball radius must be positive");
  auto xi = d.points().index_of(x);
  if (!xi) throw std::invalid_argument("unknown point label \"" + x + "\"");
  std::vector<std::string> out;
  for (std::size_t j = 0; j < d.points().size(); ++j)
    if (d.at(*xi, j) < s) out.push_back(d.points().labels[j]);
  return out;
}

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0) || !std::isfinite(v))
    throw std::invalid_argument(std::string(what) + " must be positive and finite");
}

void require_eps(double eps) {
  if (!(eps > 0) || !(eps < 1))
    throw std::invalid_argument("eps must lie strictly inside (0, 1)");
}

}  // namespace

double fuzzy_to_crisp_radius(double m, double n, double k, double r, double eps) {
  require_positive(m, "m");
  require_positive(n, "n");
  require_positive(k, "k");
  require_positive(r, "r");
  require_eps(eps);
  return eps / (1.0 - eps) * (k * std::pow(r, n)) / m;
}

double crisp_to_fuzzy_radius(double m, double n, double k, double eta, double eps) {
  require_positive(m, "m");
  require_positive(n, "n");
  require_positive(k, "k");
  require_positive(eta, "eta");
  require_eps(eps);
  return std::pow((1.0 - eps) / eps * (eta * m) / k, 1.0 / n);
}

BallFamily BallFamily::of_metric(CrispMetric d, std::vector<double> radii) {
  BallFamily f{std::move(d), std::move(radii), {}};
  return f;
}

BallFamily BallFamily::of_space(FuzzyMetricSpace space, std::vector<FuzzyBallParams> params) {
  BallFamily f{std::move(space), {}, std::move(params)};
  return f;
}

BallGrids default_ball_grids() { return {{0.5, 1.0, 1.9, 2.0, 2.5}, {0.1, 0.25, 0.5, 0.75, 0.9}}; }

std::string_view relation_name(BallRelation r) {
  switch (r) {
    case BallRelation::equal: return "equal";
    case BallRelation::left_refines_right: return "left_refines_right";
    case BallRelation::right_refines_left: return "right_refines_left";
    case BallRelation::incomparable: return "incomparable";
  }
  return "?";
}

namespace {

// A ball materialized on the sample: membership mask indexed by sample
// position, plus the parameters that produced it.
struct SampleBall {
  std::size_t center;  // sample index
  double radius;
  std::optional<double> eps;
  std::vector<bool> mask;
  std::size_t count = 0;
};

std::vector<std::size_t> resolve(const PointSet& carrier, const PointSet& sample) {
  std::vector<std::size_t> idx(sample.size());
  for (std::size_t i = 0; i < sample.size(); ++i) {
    auto at = carrier.index_of(sample.labels[i]);
    if (!at)
      throw std::invalid_argument("sample label \"" + sample.labels[i] +
                                  "\" is not in the family's carrier");
    idx[i] = *at;
  }
  return idx;
}

std::vector<SampleBall> materialize(const BallFamily& fam, const PointSet& sample,
                                    const BallGrids& params) {
  std::vector<SampleBall> balls;
  std::size_t n = sample.size();
  if (fam.is_crisp()) {
    const CrispMetric& d = std::get<CrispMetric>(fam.source);
    auto idx = resolve(d.points(), sample);
    std::vector<double> radii = fam.crisp_radii.empty() ? params.radii : fam.crisp_radii;
    if (radii.empty()) throw std::invalid_argument("radius grid is empty");
    for (double s : radii) require_positive(s, "ball radius");
    for (std::size_t c = 0; c < n; ++c) {
      for (double s : radii) {
        SampleBall b{c, s, std::nullopt, std::vector<bool>(n, false), 0};
        for (std::size_t j = 0; j < n; ++j)
          if (d.at(idx[c], idx[j]) < s) {
            b.mask[j] = true;
            ++b.count;
          }
        balls.push_back(std::move(b));
      }
    }
  } else {
    const FuzzyMetricSpace& sp = std::get<FuzzyMetricSpace>(fam.source);
    auto idx = resolve(sp.points(), sample);
    std::vector<FuzzyBallParams> grid = fam.fuzzy_params;
    if (grid.empty()) {
      if (params.radii.empty() || params.epsilons.empty())
        throw std::invalid_argument("radius/eps grids are empty");
      for (double r : params.radii)
        for (double e : params.epsilons) grid.push_back({r, e});
    }
    for (const auto& p : grid) {
      require_positive(p.r, "ball radius");
      require_eps(p.eps);
    }
    for (std::size_t c = 0; c < n; ++c) {
      for (const auto& p : grid) {
        SampleBall b{c, p.r, p.eps, std::vector<bool>(n, false), 0};
        for (std::size_t j = 0; j < n; ++j)
          if (sp.eval(idx[c], idx[j], p.r) > 1.0 - p.eps) {
            b.mask[j] = true;
            ++b.count;
          }
        balls.push_back(std::move(b));
      }
    }
  }
  return balls;
}

BallWitness describe(const SampleBall& b, const PointSet& sample, std::string side,
                     std::string why) {
  BallWitness w;
  w.side = std::move(side);
  w.center = sample.labels[b.center];
  w.radius = b.radius;
  w.eps = b.eps;
  for (std::size_t j = 0; j < sample.size(); ++j)
    if (b.mask[j]) w.members.push_back(sample.labels[j]);
  w.why = std::move(why);
  return w;
}

// Index of the first ball of `from` with no extensionally equal ball in
// `in`, or npos when every ball has a match.
std::size_t first_unmatched(const std::vector<SampleBall>& from,
                            const std::vector<SampleBall>& in) {
  std::set<std::vector<bool>> seen;
  for (const auto& b : in) seen.insert(b.mask);
  for (std::size_t i = 0; i < from.size(); ++i)
    if (!seen.count(from[i].mask)) return i;
  return static_cast<std::size_t>(-1);
}

bool subset(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

// Does `fine` refine `coarse`? For every coarse ball V and point p in V there
// must be a fine ball centered at p contained in V. On failure, reports the
// offending coarse ball and point.
struct RefineResult {
  bool holds = true;
  std::size_t coarse_ball = 0;
  std::size_t point = 0;
};

RefineResult refines(const std::vector<SampleBall>& fine, const std::vector<SampleBall>& coarse,
                     std::size_t n) {
  // Group fine balls by center, smallest first: the smallest ball around p is
  // the most likely subset, which keeps the common all-pass case cheap.
  std::vector<std::vector<std::size_t>> at_center(n);
  for (std::size_t i = 0; i < fine.size(); ++i) at_center[fine[i].center].push_back(i);
  for (auto& lst : at_center)
    std::sort(lst.begin(), lst.end(),
              [&](std::size_t a, std::size_t b) { return fine[a].count < fine[b].count; });
  for (std::size_t v = 0; v < coarse.size(); ++v) {
    for (std::size_t p = 0; p < n; ++p) {
      if (!coarse[v].mask[p]) continue;
      bool ok = false;
      for (std::size_t wi : at_center[p]) {
        if (fine[wi].count > coarse[v].count) break;  // sorted: no smaller candidates left
        if (subset(fine[wi].mask, coarse[v].mask)) {
          ok = true;
          break;
        }
      }
      if (!ok) return {false, v, p};
    }
  }
  return {true, 0, 0};
}

}  // namespace

ComparisonVerdict compare_ball_families(const BallFamily& left, const BallFamily& right,
                                        const PointSet& sample, const BallGrids& params) {
  if (sample.size() == 0) throw std::invalid_argument("sample is empty");
  std::vector<SampleBall> L = materialize(left, sample, params);
  std::vector<SampleBall> R = materialize(right, sample, params);

  ComparisonVerdict v;
  v.note = "extensional comparison on " + std::to_string(sample.size()) + " sample points, " +
           std::to_string(L.size()) + " left balls, " + std::to_string(R.size()) +
           " right balls";

  std::size_t lu = first_unmatched(L, R);
  std::size_t ru = first_unmatched(R, L);
  if (lu == static_cast<std::size_t>(-1) && ru == static_cast<std::size_t>(-1)) {
    v.relation = BallRelation::equal;
    v.note += "; every ball has an extensionally equal counterpart";
    return v;
  }

  RefineResult lr = refines(L, R, sample.size());  // left finer than right?
  RefineResult rl = refines(R, L, sample.size());
  if (lr.holds && rl.holds) {
    v.relation = BallRelation::equal;
    v.note += "; families differ as sets but refine each other (same opens on the sample)";
    return v;
  }
  if (lr.holds) {
    v.relation = BallRelation::left_refines_right;
    if (lu != static_cast<std::size_t>(-1))
      v.witnesses.push_back(describe(L[lu], sample, "left",
                                     "no extensionally equal ball in the right family"));
    else
      v.witnesses.push_back(describe(R[ru], sample, "right",
                                     "no extensionally equal ball in the left family"));
    return v;
  }
  if (rl.holds) {
    v.relation = BallRelation::right_refines_left;
    if (ru != static_cast<std::size_t>(-1))
      v.witnesses.push_back(describe(R[ru], sample, "right",
                                     "no extensionally equal ball in the left family"));
    else
      v.witnesses.push_back(describe(L[lu], sample, "left",
                                     "no extensionally equal ball in the right family"));
    return v;
  }
  v.relation = BallRelation::incomparable;
  v.witnesses.push_back(
      describe(R[lr.coarse_ball], sample, "right",
               "point \"" + sample.labels[lr.point] +
                   "\" has no left ball centered there inside this ball"));
  v.witnesses.push_back(
      describe(L[rl.coarse_ball], sample, "left",
               "point \"" + sample.labels[rl.point] +
                   "\" has no right ball centered there inside this ball"));
  return v;
}

ComparisonVerdict check_refinement_thm47(const FuzzyMetricSpace& space, const PointSet& sample,
                                         const std::vector<double>& r0_grid,
                                         const std::vector<double>& eps0_grid) {
  if (sample.size() == 0) throw std::invalid_argument("sample is empty");
  if (r0_grid.empty() || eps0_grid.empty())
    throw std::invalid_argument("radius/eps grids are empty");
  for (double r : r0_grid) require_positive(r, "r0");
  for (double e : eps0_grid) require_eps(e);

  auto idx = resolve(space.points(), sample);
  ActualMetric lim = actual_metric(space);
  std::size_t n = sample.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!lim.entry(idx[i], idx[j]).converged)
        throw std::invalid_argument("actual metric diverges on sampled pair (" +
                                    sample.labels[i] + ", " + sample.labels[j] + ")");
  auto dist = [&](std::size_t i, std::size_t j) {
    return i == j ? 0.0 : lim.entry(idx[i], idx[j]).value;
  };

  ComparisonVerdict v;
  std::size_t cells = 0, strict = 0;
  std::vector<BallWitness> violations;
  std::optional<BallWitness> strict_witness;
  for (std::size_t c = 0; c < n; ++c) {
    for (double r0 : r0_grid) {
      for (double e0 : eps0_grid) {
        ++cells;
        SampleBall inner{c, r0, std::nullopt, std::vector<bool>(n, false), 0};
        SampleBall outer{c, r0, e0, std::vector<bool>(n, false), 0};
        for (std::size_t j = 0; j < n; ++j) {
          if (dist(c, j) < r0) {
            inner.mask[j] = true;
            ++inner.count;
          }
          if (space.eval(idx[c], idx[j], r0) > 1.0 - e0) {
            outer.mask[j] = true;
            ++outer.count;
          }
        }
        if (!subset(inner.mask, outer.mask)) {
          if (violations.size() < 3) {
            std::size_t p = 0;
            while (!(inner.mask[p] && !outer.mask[p])) ++p;
            violations.push_back(describe(
                inner, sample, "left",
                "actual-metric ball is not contained in the fuzzy ball (r0=" +
                    format_double(r0) + ", eps0=" + format_double(e0) + "): point \"" +
                    sample.labels[p] + "\" escapes"));
          }
        } else if (inner.count < outer.count) {
          ++strict;
          if (!strict_witness) {
            strict_witness = describe(
                inner, sample, "left",
                "strictly contained in the fuzzy ball of the same radius (r0=" +
                    format_double(r0) + ", eps0=" + format_double(e0) + ", " +
                    std::to_string(inner.count) + " vs " + std::to_string(outer.count) +
                    " points)");
          }
        }
      }
    }
  }
  if (!violations.empty()) {
    v.relation = BallRelation::incomparable;
    v.witnesses = std::move(violations);
    v.note = "containment failed; checked " + std::to_string(cells) + " grid cells";
    return v;
  }
  if (strict == 0) {
    v.relation = BallRelation::equal;
    v.witnesses.clear();
    v.note = "inclusion holds with set equality at every one of " + std::to_string(cells) +
             " grid cells";
  } else {
    v.relation = BallRelation::left_refines_right;
    v.witnesses.push_back(std::move(*strict_witness));
    v.note = "inclusion holds at every one of " + std::to_string(cells) + " grid cells, strict at " +
             std::to_string(strict);
  }
  return v;
}

}  // namespace fuzmet
