#include "fuzmet/fuzzy_space.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "fuzmet/numeric.hpp"

namespace fuzmet {

FuzzyMetricSpace::FuzzyMetricSpace(PointSet points, std::vector<Membership> upper_triangle)
    : points_(std::move(points)), tri_(std::move(upper_triangle)) {
  std::size_t n = points_.size();
  if (tri_.size() != n * (n - 1) / 2)
    throw std::invalid_argument("need exactly one profile per unordered pair of distinct points");
}

std::size_t FuzzyMetricSpace::tri(std::size_t i, std::size_t j) const {
  std::size_t n = points_.size();
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

const Membership& FuzzyMetricSpace::pair(std::size_t i, std::size_t j) const {
  if (i == j) throw std::logic_error("the diagonal has no stored profile");
  if (i > j) std::swap(i, j);
  return tri_[tri(i, j)];
}

bool FuzzyMetricSpace::is_exact() const {
  return std::all_of(tri_.begin(), tri_.end(), [](const Membership& m) { return m.is_exact(); });
}

FuzzyMetricSpace build_space(PointSet points, std::vector<PairAssignment> pairs) {
  std::size_t n = points.size();
  std::vector<std::optional<Membership>> slots(n * (n - 1) / 2);
  auto tri = [n](std::size_t i, std::size_t j) { return i * (2 * n - i - 1) / 2 + (j - i - 1); };
  for (auto& pa : pairs) {
    auto xi = points.index_of(pa.x);
    auto yi = points.index_of(pa.y);
    if (!xi) throw std::invalid_argument("unknown point label \"" + pa.x + "\"");
    if (!yi) throw std::invalid_argument("unknown point label \"" + pa.y + "\"");
    if (*xi == *yi)
      throw std::invalid_argument("pair (" + pa.x + ", " + pa.y +
                                  ") assigns the diagonal, which is fixed to 1");
    std::size_t i = std::min(*xi, *yi), j = std::max(*xi, *yi);
    if (slots[tri(i, j)])
      throw std::invalid_argument("duplicate profile for pair (" + points.labels[i] + ", " +
                                  points.labels[j] + ")");
    slots[tri(i, j)] = std::move(pa.m);
  }
  std::vector<Membership> upper;
  upper.reserve(slots.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto& slot = slots[tri(i, j)];
      if (!slot)
        throw std::invalid_argument("missing profile for pair (" + points.labels[i] + ", " +
                                    points.labels[j] + ")");
      upper.push_back(std::move(*slot));
    }
  }
  return FuzzyMetricSpace(std::move(points), std::move(upper));
}

FuzzyMetricSpace generate_profile_space(const CrispMetric& d, const Membership& g) {
  AxiomReport drep = check_metric_axioms(d, 0.0);
  if (!drep.axioms_hold()) {
    auto f = drep.first_failure();
    throw std::invalid_argument(std::string("distance matrix fails the ") + axiom_name(f->axiom) +
                                " axiom at " + f->witness + ": " + f->detail);
  }
  for (const auto& c : verify_profile(g, false)) {
    bool required = c.axiom == Axiom::KM5 || c.axiom == Axiom::KM2;
    if (required && !c.passed)
      throw std::invalid_argument("unit profile template is not admissible: " + c.detail);
  }
  std::size_t n = d.size();
  std::vector<Membership> upper;
  upper.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) upper.push_back(g.with_time_scale(d.at(i, j)));
  return FuzzyMetricSpace(d.points(), std::move(upper));
}

namespace {

std::string pair_name(const PointSet& ps, std::size_t i, std::size_t j) {
  return "(" + ps.labels[i] + ", " + ps.labels[j] + ")";
}

// Aggregates one axiom's per-pair outcomes into a single space-level entry.
struct Aggregate {
  Axiom axiom;
  bool passed = true;
  std::string witness;
  std::string first_detail;
  std::size_t failing_pairs = 0;

  explicit Aggregate(Axiom a) : axiom(a) {}

  void absorb(const PointSet& ps, std::size_t i, std::size_t j, const AxiomCheck& c,
              bool& pair_already_failed) {
    if (c.passed) return;
    if (!pair_already_failed) ++failing_pairs;
    pair_already_failed = true;
    if (passed) {
      passed = false;
      witness = "pair " + pair_name(ps, i, j) + (c.witness.empty() ? "" : ", " + c.witness);
      first_detail = c.detail;
    }
  }

  AxiomCheck finish(std::size_t total_pairs, const std::string& pass_detail) const {
    AxiomCheck out{axiom, passed, witness, ""};
    if (passed) {
      out.detail = pass_detail;
    } else {
      out.detail = first_detail + " (" + std::to_string(failing_pairs) + " of " +
                   std::to_string(total_pairs) + " pairs fail)";
    }
    return out;
  }
};

// Probe times for the KM4 check: every pair's breakpoints with their right
// neighbours (step jumps are only visible strictly above the jump), midpoints
// between consecutive breakpoints, seeded random draws, and points beyond
// every profile's span.
std::vector<double> km4_time_grid(const FuzzyMetricSpace& s, const GridConfig& cfg,
                                  std::vector<double>& breaks_out) {
  std::set<double> breaks;
  double span = 1.0;
  std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (double b : s.pair(i, j).breakpoints()) breaks.insert(b);
      span = std::max(span, s.pair(i, j).span_hint());
    }
  }
  std::set<double> pts;
  for (double b : breaks) {
    pts.insert(b);
    pts.insert(std::nextafter(b, kInf));
  }
  for (auto it = breaks.begin(); it != breaks.end(); ++it) {
    auto next = std::next(it);
    if (next != breaks.end()) pts.insert(*it + (*next - *it) / 2);
  }
  pts.insert(span * 1.5);
  pts.insert(span * 3);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> dist(0.0, 1.25 * span);
  for (int i = 0; i < cfg.t_samples; ++i) pts.insert(dist(rng));
  breaks_out.assign(breaks.begin(), breaks.end());
  return std::vector<double>(pts.begin(), pts.end());
}

}  // namespace

std::vector<double> axiom_time_grid(const FuzzyMetricSpace& space, const GridConfig& grid) {
  std::vector<double> breaks;
  return km4_time_grid(space, grid, breaks);
}

namespace {

AxiomCheck check_km4(const FuzzyMetricSpace& s, const GridConfig& cfg) {
  AxiomCheck out{Axiom::KM4, true, "", ""};
  std::size_t n = s.size();
  const auto& labels = s.points().labels;
  if (n < 3) {
    out.detail = "no nondegenerate triples; degenerate cases reduce to monotonicity";
    return out;
  }
  std::vector<double> breaks;
  std::vector<double> G = km4_time_grid(s, cfg, breaks);

  // (t, s) probe pairs: the full product plus completions where t + s lands
  // exactly on a breakpoint of some pair.
  std::vector<std::pair<double, double>> probes;
  probes.reserve(G.size() * G.size());
  for (double t : G) {
    if (t <= 0) continue;
    for (double u : G)
      if (u > 0) probes.emplace_back(t, u);
    for (double b : breaks) {
      if (t < b) {
        probes.emplace_back(t, b - t);
        probes.emplace_back(b - t, t);
      }
    }
  }

  std::size_t violations = 0;
  // Swapping x and z mirrors the inequality under the symmetric probe set, so
  // unordered {x, z} suffices.
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t z = x + 1; z < n; ++z) {
      for (std::size_t y = 0; y < n; ++y) {
        if (y == x || y == z) continue;
        for (const auto& [t, u] : probes) {
          double lhs = s.eval(x, z, t + u);
          double rhs = std::min(s.eval(x, y, t), s.eval(y, z, u));
          if (lhs < rhs) {
            if (violations == 0) {
              out.passed = false;
              out.witness = "(" + labels[x] + ", " + labels[y] + ", " + labels[z] + ") at t=" +
                            format_double(t) + ", s=" + format_double(u);
              out.detail = "M(x,z,t+s)=" + format_double(lhs) +
                           " < min(M(x,y,t), M(y,z,s))=" + format_double(rhs);
            }
            ++violations;
          }
        }
      }
    }
  }
  if (out.passed) {
    out.detail = "min-triangle holds on " + std::to_string(probes.size()) +
                 " probe pairs per triple (zero slack)";
  } else {
    out.detail += "; " + std::to_string(violations) + " violating probe(s)";
  }
  return out;
}

}  // namespace

AxiomReport check_axioms(const FuzzyMetricSpace& space, const GridConfig& grid) {
  std::size_t n = space.size();
  const PointSet& ps = space.points();
  std::size_t total_pairs = n * (n - 1) / 2;

  Aggregate km1(Axiom::KM1), km2(Axiom::KM2), km5(Axiom::KM5), sdp(Axiom::SDP), fd(Axiom::FD);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool f1 = false, f2 = false, f5 = false, fs = false, ff = false;
      for (const auto& c : verify_profile(space.pair(i, j), false, grid)) {
        switch (c.axiom) {
          case Axiom::KM1: km1.absorb(ps, i, j, c, f1); break;
          case Axiom::KM2: km2.absorb(ps, i, j, c, f2); break;
          case Axiom::KM5: km5.absorb(ps, i, j, c, f5); break;
          case Axiom::SDP: sdp.absorb(ps, i, j, c, fs); break;
          case Axiom::FD: fd.absorb(ps, i, j, c, ff); break;
          default: break;
        }
      }
    }
  }

  AxiomReport rep;
  rep.add(km1.finish(total_pairs, "M == 0 at t <= 0 for all pairs"));
  rep.add(km2.finish(total_pairs,
                     "diagonal fixed to 1 by construction; every pair profile leaves 1"));
  rep.add({Axiom::KM3, true, "",
           "symmetry holds by construction: one profile per unordered pair"});
  rep.add(check_km4(space, grid));
  rep.add(km5.finish(total_pairs, "nondecreasing, left-continuous, tail limit 1 for all pairs"));
  rep.add(sdp.finish(total_pairs, "M -> 0 as t -> 0+ for all pairs"));
  rep.add(fd.finish(total_pairs, "every pair reaches 1 at finite time"));
  return rep;
}

std::vector<std::string> open_ball(const FuzzyMetricSpace& space, const std::string& center,
                                   double r, double eps) {
  auto ci = space.points().index_of(center);
  if (!ci) throw std::invalid_argument("unknown center label \"" + center + "\"");
  if (!std::isfinite(r) || r <= 0) throw std::invalid_argument("ball radius must be positive");
  if (!(eps > 0) || !(eps < 1)) throw std::invalid_argument("ball level must lie in (0, 1)");
  std::vector<std::string> members;
  for (std::size_t j = 0; j < space.size(); ++j)
    if (space.eval(*ci, j, r) > 1.0 - eps) members.push_back(space.points().labels[j]);
  return members;
}

}  // namespace fuzmet
