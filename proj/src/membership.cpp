#include "fuzmet/membership.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "fuzmet/numeric.hpp"

namespace fuzmet {

namespace {

std::string level_unreachable_msg(double lambda, double cap) {
  std::ostringstream os;
  os << "level " << format_double(lambda) << " not reached below search cap "
     << format_double(cap);
  return os.str();
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void validate_lambda(double lambda, double lo) {
  require(std::isfinite(lambda) && lambda >= lo && lambda <= 1.0,
          "lambda must lie in [" + format_double(lo) + ", 1]");
}

void validate(const PiecewiseSpec& s) {
  double prev = 0;
  for (const auto& seg : s.segments) {
    require(std::isfinite(seg.end) && seg.end > prev,
            "segment ends must be finite, positive, and strictly increasing");
    for (double v : {seg.v_start, seg.v_end})
      require(std::isfinite(v) && v >= 0.0 && v <= 1.0,
              "segment values must lie in [0, 1]");
    prev = seg.end;
  }
  require(std::isfinite(s.tail) && s.tail >= 0.0 && s.tail <= 1.0,
          "tail value must lie in [0, 1]");
}

void validate(const RationalSpec& s) {
  for (double v : {s.m, s.n, s.k, s.c})
    require(std::isfinite(v) && v > 0.0, "rational parameters m, n, k, c must be positive");
  require(std::isfinite(s.scale) && s.scale > 0.0 && s.scale <= 1.0,
          "rational scale must lie in (0, 1]");
  if (s.cap) require(std::isfinite(*s.cap) && *s.cap > 0.0, "cap must be positive and finite");
}

void validate(const BlackBoxSpec& s) {
  require(static_cast<bool>(s.fn), "black-box profile requires a callable");
  require(std::isfinite(s.tol) && s.tol > 0.0, "tol must be positive");
  require(std::isfinite(s.search_cap) && s.search_cap > 0.0, "search_cap must be positive");
  require(std::isfinite(s.fd_tol) && s.fd_tol > 0.0 && s.fd_tol < 1.0,
          "fd_tol must lie in (0, 1)");
}

double seg_start(const PiecewiseSpec& s, std::size_t i) {
  return i == 0 ? 0.0 : s.segments[i - 1].end;
}

// t where the affine piece (a, b] from vs to ve takes the value lambda. The
// endpoint value ve is attained at exactly b, so that case must not go
// through the interpolation arithmetic: its rounding can land one ulp off the
// stored end, which level queries compare bitwise against segment bounds.
double cross(double a, double b, double vs, double ve, double lambda) {
  if (lambda == ve) return b;
  return a + (lambda - vs) * (b - a) / (ve - vs);
}

double pw_eval(const PiecewiseSpec& s, double t) {
  if (t <= 0) return 0;
  for (std::size_t i = 0; i < s.segments.size(); ++i) {
    const auto& seg = s.segments[i];
    if (t <= seg.end) {
      if (seg.v_start == seg.v_end) return seg.v_start;
      return seg.v_start +
             (t - seg_start(s, i)) * (seg.v_end - seg.v_start) / (seg.end - seg_start(s, i));
    }
  }
  return s.tail;
}

double pw_last_end(const PiecewiseSpec& s) {
  return s.segments.empty() ? 0.0 : s.segments.back().end;
}

double pw_level_inf(const PiecewiseSpec& s, double lambda) {
  for (std::size_t i = 0; i < s.segments.size(); ++i) {
    const auto& seg = s.segments[i];
    double a = seg_start(s, i);
    if (seg.v_start == seg.v_end) {
      if (seg.v_start > lambda) return a;
    } else if (seg.v_start < seg.v_end) {
      if (seg.v_end > lambda)
        return std::max(a, cross(a, seg.end, seg.v_start, seg.v_end, lambda));
    } else {
      // decreasing piece: the supremum is the (unattained) right-open start value
      if (seg.v_start > lambda) return a;
    }
  }
  if (s.tail > lambda) return pw_last_end(s);
  return kInf;
}

double pw_level_sup(const PiecewiseSpec& s, double lambda) {
  if (s.tail < lambda) return kInf;
  for (std::size_t i = s.segments.size(); i-- > 0;) {
    const auto& seg = s.segments[i];
    double a = seg_start(s, i);
    if (seg.v_end < lambda) return seg.end;
    if (seg.v_start < seg.v_end && seg.v_start < lambda)
      return std::min(seg.end, cross(a, seg.end, seg.v_start, seg.v_end, lambda));
  }
  return 0;
}

Plateau pw_plateau(const PiecewiseSpec& s, double lambda) {
  struct Comp {
    double lo, hi;
    bool loc, hic;
  };
  std::vector<Comp> comps;
  for (std::size_t i = 0; i < s.segments.size(); ++i) {
    const auto& seg = s.segments[i];
    double a = seg_start(s, i);
    if (seg.v_start == seg.v_end) {
      if (seg.v_start == lambda) comps.push_back({a, seg.end, false, true});
    } else if (seg.v_start < seg.v_end) {
      if (seg.v_start < lambda && lambda <= seg.v_end) {
        double r = std::min(seg.end, cross(a, seg.end, seg.v_start, seg.v_end, lambda));
        comps.push_back({r, r, true, true});
      }
    } else {
      if (seg.v_end <= lambda && lambda < seg.v_start) {
        double r = std::min(seg.end, cross(a, seg.end, seg.v_start, seg.v_end, lambda));
        comps.push_back({r, r, true, true});
      }
    }
  }
  if (s.tail == lambda) comps.push_back({pw_last_end(s), kInf, false, false});

  std::vector<Comp> merged;
  for (const auto& c : comps) {
    if (!merged.empty() && merged.back().hi == c.lo && (merged.back().hic || c.loc)) {
      merged.back().hi = c.hi;
      merged.back().hic = c.hic;
      merged.back().loc = merged.back().loc || (merged.back().lo == merged.back().hi && c.loc);
    } else {
      merged.push_back(c);
    }
  }
  Plateau p;
  if (merged.empty()) return p;
  const auto& first = merged.front();
  const auto& last = merged.back();
  p.lo = first.lo;
  p.hi = last.hi;
  p.lo_closed = first.loc;
  p.hi_closed = last.hic;
  p.kind = (merged.size() == 1 && first.lo == first.hi) ? Plateau::Kind::point
                                                        : Plateau::Kind::interval;
  return p;
}

OneThreshold pw_one_threshold(const PiecewiseSpec& s) {
  for (std::size_t i = 0; i < s.segments.size(); ++i) {
    const auto& seg = s.segments[i];
    if (seg.v_start == seg.v_end) {
      if (seg.v_start == 1.0) return {true, seg_start(s, i), false};
    } else if (seg.v_end == 1.0) {
      return {true, seg.end, true};
    }
  }
  if (s.tail == 1.0) return {true, pw_last_end(s), false};
  return {false, kInf, false};
}

bool pw_identically_one(const PiecewiseSpec& s) {
  for (const auto& seg : s.segments)
    if (seg.v_start != 1.0 || seg.v_end != 1.0) return false;
  return s.tail == 1.0;
}

// --- rational backend ----------------------------------------------------

double rat_eval(const RationalSpec& r, double t) {
  if (t <= 0) return 0;
  if (r.cap && t > *r.cap) return 1;
  double kt = r.k * pown(t, r.n);
  return (r.scale * kt) / (kt + r.m * r.c);
}

// The unique t > 0 with value == lambda, for lambda in (0, scale). All level
// and plateau queries share this so their answers agree bitwise.
double rat_root(const RationalSpec& r, double lambda) {
  double x = ((lambda * r.m) * r.c) / (r.k * (r.scale - lambda));
  return r.n == 1.0 ? x : std::pow(x, 1.0 / r.n);
}

// Common answer of level_inf and level_sup away from the lambda == 1 /
// lambda == 0 edge cases: the crossing point, the cap, or +inf.
double rat_level(const RationalSpec& r, double lambda) {
  if (r.cap) {
    double vT = rat_eval(r, *r.cap);
    if (lambda < vT) return std::min(rat_root(r, lambda), *r.cap);
    return *r.cap;
  }
  if (lambda < r.scale) return rat_root(r, lambda);
  return kInf;
}

// --- black-box backend ---------------------------------------------------

double bb_eval(const BlackBoxSpec& b, double t) { return t <= 0 ? 0.0 : b.fn(t); }

}  // namespace

LevelUnreachable::LevelUnreachable(double lambda_, double cap_)
    : std::runtime_error(level_unreachable_msg(lambda_, cap_)), lambda(lambda_), cap(cap_) {}

Membership Membership::piecewise(PiecewiseSpec spec) {
  validate(spec);
  return Membership(std::move(spec));
}

Membership Membership::rational(RationalSpec spec) {
  validate(spec);
  return Membership(std::move(spec));
}

Membership Membership::black_box(BlackBoxSpec spec) {
  validate(spec);
  return Membership(std::move(spec));
}

Membership Membership::always_one() { return piecewise({{}, 1.0}); }

Membership Membership::step_at(double c) {
  require(std::isfinite(c) && c >= 0.0, "step point must be nonnegative and finite");
  if (c == 0.0) return always_one();
  return piecewise({{{c, 0.0, 0.0}}, 1.0});
}

Membership Membership::ramp01() { return piecewise({{{1.0, 0.0, 1.0}}, 1.0}); }

double Membership::eval(double t) const {
  if (const auto* pw = std::get_if<PiecewiseSpec>(&spec_)) return pw_eval(*pw, t);
  if (const auto* rat = std::get_if<RationalSpec>(&spec_)) return rat_eval(*rat, t);
  return bb_eval(std::get<BlackBoxSpec>(spec_), t);
}

double Membership::level_inf(double lambda) const {
  validate_lambda(lambda, 0.0);
  if (const auto* pw = std::get_if<PiecewiseSpec>(&spec_)) return pw_level_inf(*pw, lambda);
  if (const auto* rat = std::get_if<RationalSpec>(&spec_)) {
    if (lambda >= 1.0) return kInf;  // values never exceed 1
    return rat_level(*rat, lambda);
  }
  const auto& bb = std::get<BlackBoxSpec>(spec_);
  if (lambda >= 1.0) return kInf;
  auto r = boundary_up_closed([&](double t) { return bb_eval(bb, t) > lambda; }, bb.search_cap,
                              bb.tol);
  if (!r.found) throw LevelUnreachable(lambda, bb.search_cap);
  return r.value;
}

double Membership::level_sup(double lambda) const {
  validate_lambda(lambda, 0.0);
  if (const auto* pw = std::get_if<PiecewiseSpec>(&spec_)) return pw_level_sup(*pw, lambda);
  if (const auto* rat = std::get_if<RationalSpec>(&spec_)) {
    if (lambda == 0.0) return 0;  // values never drop below 0
    return rat_level(*rat, lambda);
  }
  const auto& bb = std::get<BlackBoxSpec>(spec_);
  if (lambda == 0.0) return 0;
  auto r = boundary_down_closed([&](double t) { return bb_eval(bb, t) < lambda; }, bb.search_cap,
                                bb.tol);
  if (!r.found) throw LevelUnreachable(lambda, bb.search_cap);
  return r.value;
}

Plateau Membership::plateau(double lambda) const {
  validate_lambda(lambda, 0.0);
  require(lambda > 0.0, "plateau is defined for lambda in (0, 1]");
  if (const auto* pw = std::get_if<PiecewiseSpec>(&spec_)) return pw_plateau(*pw, lambda);
  if (const auto* rat = std::get_if<RationalSpec>(&spec_)) {
    Plateau p;
    if (rat->cap) {
      double vT = rat_eval(*rat, *rat->cap);
      if (lambda == 1.0) {
        p.kind = Plateau::Kind::interval;
        p.lo = *rat->cap;
        p.hi = kInf;
        return p;
      }
      if (lambda == vT || lambda < vT) {
        p.kind = Plateau::Kind::point;
        p.lo = p.hi = lambda == vT ? *rat->cap : std::min(rat_root(*rat, lambda), *rat->cap);
        p.lo_closed = p.hi_closed = true;
        return p;
      }
      return p;  // vT < lambda < 1: a gap the jump skips over
    }
    if (lambda < rat->scale) {
      p.kind = Plateau::Kind::point;
      p.lo = p.hi = rat_root(*rat, lambda);
      p.lo_closed = p.hi_closed = true;
    }
    return p;  // lambda >= scale: the supremum is never attained
  }
  throw std::logic_error("plateau is undecidable for black-box profiles");
}

OneThreshold Membership::one_threshold() const {
  if (const auto* pw = std::get_if<PiecewiseSpec>(&spec_)) return pw_one_threshold(*pw);
  if (const auto* rat = std::get_if<RationalSpec>(&spec_)) {
    if (rat->cap) return {true, *rat->cap, false};
    return {false, kInf, false};
  }
  const auto& bb = std::get<BlackBoxSpec>(spec_);
  auto r = boundary_up_closed([&](double t) { return bb_eval(bb, t) >= 1.0 - bb.fd_tol; },
                              bb.search_cap, bb.tol);
  if (!r.found) return {false, kInf, false};
  return {true, r.value, bb_eval(bb, r.value) >= 1.0 - bb.fd_tol};
}

double Membership::sup_below_one() const {
  if (const auto* pw = std::get_if<PiecewiseSpec>(&spec_)) return pw_level_sup(*pw, 1.0);
  if (const auto* rat = std::get_if<RationalSpec>(&spec_)) return rat_level(*rat, 1.0);
  const auto& bb = std::get<BlackBoxSpec>(spec_);
  auto r = boundary_down_closed([&](double t) { return bb_eval(bb, t) < 1.0 - bb.fd_tol; },
                                bb.search_cap, bb.tol);
  return r.found ? r.value : kInf;
}

Membership Membership::with_time_scale(double f) const {
  require(std::isfinite(f) && f > 0.0, "time scale must be positive and finite");
  if (const auto* pw = std::get_if<PiecewiseSpec>(&spec_)) {
    PiecewiseSpec scaled = *pw;
    double prev = 0;
    for (auto& seg : scaled.segments) {
      seg.end *= f;  // endpoint values carry over verbatim, so shapes stay exact
      require(seg.end > prev, "time scale collapses adjacent segment ends");
      prev = seg.end;
    }
    return Membership(std::move(scaled));
  }
  if (const auto* rat = std::get_if<RationalSpec>(&spec_)) {
    RationalSpec scaled = *rat;
    scaled.c = rat->c * pown(f, rat->n);
    if (scaled.cap) *scaled.cap *= f;
    return Membership(std::move(scaled));
  }
  const auto& bb = std::get<BlackBoxSpec>(spec_);
  BlackBoxSpec scaled = bb;
  scaled.fn = [fn = bb.fn, f](double t) { return fn(t / f); };
  scaled.search_cap = bb.search_cap;
  return Membership(std::move(scaled));
}

const char* Membership::backend_name() const {
  if (std::holds_alternative<PiecewiseSpec>(spec_)) return "piecewise";
  if (std::holds_alternative<RationalSpec>(spec_)) return "rational";
  return "blackbox";
}

std::vector<double> Membership::breakpoints() const {
  if (const auto* pw = std::get_if<PiecewiseSpec>(&spec_)) {
    std::vector<double> out;
    out.reserve(pw->segments.size());
    for (const auto& seg : pw->segments) out.push_back(seg.end);
    return out;
  }
  if (const auto* rat = std::get_if<RationalSpec>(&spec_)) {
    if (rat->cap) return {*rat->cap};
    return {};
  }
  return {};
}

double Membership::span_hint() const {
  if (const auto* pw = std::get_if<PiecewiseSpec>(&spec_)) {
    return pw->segments.empty() ? 1.0 : pw->segments.back().end;
  }
  if (const auto* rat = std::get_if<RationalSpec>(&spec_)) {
    if (rat->cap) return *rat->cap;
    return rat_root(*rat, rat->scale / 2);  // where the profile reaches half its range
  }
  const auto& bb = std::get<BlackBoxSpec>(spec_);
  double span = 1;
  if (bb_eval(bb, 1.0) < 0.5) {
    while (span < bb.search_cap && bb_eval(bb, span) < 0.5) span *= 4;
  } else {
    while (span > 1e-9 && bb_eval(bb, span / 4) >= 0.5) span /= 4;
  }
  return std::min(span, bb.search_cap);
}

// --- per-profile verification --------------------------------------------

namespace {

std::string t_witness(double t) { return "t=" + format_double(t); }

std::vector<double> probe_grid(const Membership& m, const GridConfig& grid) {
  std::vector<double> pts;
  double span = m.span_hint();
  if (grid.include_breakpoints) {
    for (double b : m.breakpoints()) {
      pts.push_back(b);
      pts.push_back(std::nextafter(b, kInf));
    }
  }
  for (double frac : {1e-9, 1e-6, 1e-3, 0.01, 0.1, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 4.0, 16.0})
    pts.push_back(span * frac);
  std::mt19937_64 rng(grid.seed);
  std::uniform_real_distribution<double> dist(0.0, 2.0 * span);
  for (int i = 0; i < grid.t_samples; ++i) pts.push_back(dist(rng));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

AxiomCheck check_km1(const Membership& m) {
  AxiomCheck c{Axiom::KM1, true, "", "M(t) == 0 for t <= 0"};
  for (double t : {0.0, -0.25, -1.0}) {
    if (m.eval(t) != 0.0) {
      c.passed = false;
      c.witness = t_witness(t);
      c.detail = "M(t) != 0 at nonpositive t";
      break;
    }
  }
  return c;
}

AxiomCheck check_monotone(const Membership& m, const std::vector<double>& pts) {
  AxiomCheck c{Axiom::KM5, true, "", "monotone: nondecreasing in t"};
  if (const auto* pw = m.piecewise_spec()) {
    double prev_value = 0;  // M(0)
    for (std::size_t i = 0; i < pw->segments.size(); ++i) {
      const auto& seg = pw->segments[i];
      double a = i == 0 ? 0.0 : pw->segments[i - 1].end;
      if (seg.v_start < prev_value) {
        c.passed = false;
        c.witness = t_witness(a);
        c.detail = "monotone: value drops across the junction at t=" + format_double(a);
        return c;
      }
      if (seg.v_end < seg.v_start) {
        c.passed = false;
        c.witness = "t in (" + format_double(a) + ", " + format_double(seg.end) + "]";
        c.detail = "monotone: decreasing piece";
        return c;
      }
      prev_value = seg.v_end;
    }
    if (pw->tail < prev_value) {
      c.passed = false;
      c.witness = t_witness(pw_last_end(*pw));
      c.detail = "monotone: tail value drops below the last piece";
      return c;
    }
    c.detail = "monotone: verified structurally on all pieces";
    return c;
  }
  if (m.rational_spec()) {
    c.detail = "monotone: strictly increasing closed form";
    return c;
  }
  double prev_t = 0, prev_v = 0;
  for (double t : pts) {
    double v = m.eval(t);
    if (v < prev_v) {
      c.passed = false;
      c.witness = t_witness(t);
      c.detail = "monotone: M(" + format_double(prev_t) + ")=" + format_double(prev_v) +
                 " > M(" + format_double(t) + ")=" + format_double(v);
      return c;
    }
    prev_t = t;
    prev_v = v;
  }
  c.detail = "monotone: nondecreasing across " + std::to_string(pts.size()) + " probes";
  return c;
}

AxiomCheck check_left_continuity(const Membership& m) {
  AxiomCheck c{Axiom::KM5, true, "", ""};
  if (m.is_exact()) {
    c.detail =
        "left-continuity: structural (pieces are closed on the right; jumps open rightward)";
  } else {
    c.detail =
        "left-continuity: declared; point sampling cannot refute left-continuity of a "
        "black-box profile";
  }
  return c;
}

AxiomCheck check_tail(const Membership& m) {
  AxiomCheck c{Axiom::KM5, true, "", "tail: M(t) -> 1 as t -> inf"};
  if (const auto* pw = m.piecewise_spec()) {
    if (pw->tail != 1.0) {
      c.passed = false;
      c.witness = "t > " + format_double(pw_last_end(*pw));
      c.detail = "tail: limit is " + format_double(pw->tail) + ", not 1";
    }
    return c;
  }
  if (const auto* rat = m.rational_spec()) {
    if (!rat->cap && rat->scale != 1.0) {
      c.passed = false;
      c.witness = "t -> inf";
      c.detail = "tail: limit is " + format_double(rat->scale) + ", not 1";
    }
    return c;
  }
  const auto& bb = *m.black_box_spec();
  double v = m.eval(bb.search_cap);
  if (v < 1.0 - bb.fd_tol) {
    c.passed = false;
    c.witness = t_witness(bb.search_cap);
    c.detail = "tail: M at the search cap is " + format_double(v) + ", not within fd_tol of 1";
  } else {
    c.detail = "tail: within fd_tol of 1 at the search cap";
  }
  return c;
}

AxiomCheck check_sdp(const Membership& m) {
  AxiomCheck c{Axiom::SDP, true, "", "M(t) -> 0 as t -> 0+"};
  if (const auto* pw = m.piecewise_spec()) {
    double limit = pw->segments.empty() ? pw->tail : pw->segments.front().v_start;
    if (limit != 0.0) {
      c.passed = false;
      c.witness = "t -> 0+";
      c.detail = "limit at 0+ is " + format_double(limit) + ", not 0";
    }
    return c;
  }
  if (m.rational_spec()) {
    c.detail = "limit at 0+ is 0 (closed form)";
    return c;
  }
  double probe = m.span_hint() * 1e-12;
  double v = m.eval(probe);
  if (v > 1e-6) {
    c.passed = false;
    c.witness = t_witness(probe);
    c.detail = "M near 0+ is " + format_double(v) + ", not small";
  } else {
    c.detail = "M(" + format_double(probe) + ") = " + format_double(v) + " (sampled)";
  }
  return c;
}

AxiomCheck check_km2_diagonal(const Membership& m, const std::vector<double>& pts) {
  AxiomCheck c{Axiom::KM2, true, "", "diagonal profile: M == 1 on t > 0"};
  if (const auto* pw = m.piecewise_spec()) {
    if (!pw_identically_one(*pw)) {
      c.passed = false;
      c.witness = "some t > 0";
      c.detail = "diagonal profile takes a value below 1";
    }
    return c;
  }
  if (m.rational_spec()) {
    c.passed = false;
    c.witness = "t -> 0+";
    c.detail = "rational profiles approach 0 near t = 0, so the diagonal cannot be 1";
    return c;
  }
  const auto& bb = *m.black_box_spec();
  for (double t : pts) {
    if (t <= 0) continue;
    if (m.eval(t) < 1.0 - bb.fd_tol) {
      c.passed = false;
      c.witness = t_witness(t);
      c.detail = "diagonal profile is " + format_double(m.eval(t)) + " at a probe";
      return c;
    }
  }
  c.detail = "diagonal profile: 1 within fd_tol at all probes";
  return c;
}

AxiomCheck check_km2_offdiag(const Membership& m, const std::vector<double>& pts) {
  AxiomCheck c{Axiom::KM2, true, "", "off-diagonal profile: M != 1 somewhere on t > 0"};
  if (const auto* pw = m.piecewise_spec()) {
    if (pw_identically_one(*pw)) {
      c.passed = false;
      c.witness = "all t > 0";
      c.detail = "off-diagonal profile is identically 1, indistinguishable from the diagonal";
    }
    return c;
  }
  if (m.rational_spec()) {
    c.detail = "off-diagonal profile: below 1 near t = 0 (closed form)";
    return c;
  }
  const auto& bb = *m.black_box_spec();
  for (double t : pts)
    if (t > 0 && m.eval(t) < 1.0 - bb.fd_tol) return c;
  c.passed = false;
  c.witness = "all probes";
  c.detail = "off-diagonal profile is 1 within fd_tol at every probe";
  return c;
}

AxiomCheck check_fd(const Membership& m) {
  OneThreshold ot = m.one_threshold();
  AxiomCheck c{Axiom::FD, ot.finite, "", ""};
  if (ot.finite) {
    c.detail = "reaches 1 from t_star=" + format_double(ot.t_star) +
               (ot.attained ? " (attained)" : " (not attained)");
  } else {
    c.witness = "all finite t";
    c.detail = m.is_exact() ? "never reaches 1"
                            : "does not reach 1 (within fd_tol) below the search cap";
  }
  return c;
}

}  // namespace

std::vector<AxiomCheck> verify_profile(const Membership& m, bool is_diagonal,
                                       const GridConfig& grid) {
  std::vector<AxiomCheck> out;
  auto pts = probe_grid(m, grid);
  out.push_back(check_km1(m));
  out.push_back(check_monotone(m, pts));
  out.push_back(check_left_continuity(m));
  out.push_back(check_tail(m));
  if (is_diagonal) {
    out.push_back(check_km2_diagonal(m, pts));
  } else {
    out.push_back(check_sdp(m));
    out.push_back(check_km2_offdiag(m, pts));
  }
  out.push_back(check_fd(m));
  return out;
}

}  // namespace fuzmet
