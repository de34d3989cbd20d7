#include "fuzmet/cli.hpp"

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fuzmet/balls.hpp"
#include "fuzmet/catalog.hpp"
#include "fuzmet/crispify.hpp"
#include "fuzmet/fuzzify.hpp"
#include "fuzmet/numeric.hpp"
#include "json.hpp"

namespace fuzmet {

namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

// Effective options after merging the config file with command-line flags
// (flags win).
struct Options {
  std::string command;
  fs::path out_dir = ".";
  std::string format = "csv";  // matrix emission: csv files or embedded json
  std::uint64_t seed = 0;
  std::vector<double> lambda_grid;  // empty: command default
  double cap = 1e12;
  double lambda_star = 1.0 - 1e-6;
  double tol = 0.0;  // triangle slack for crisp-metric validation
  bool timings = false;
};

// ---- config plumbing -------------------------------------------------------

ordered_json load_config(const std::string& path) {
  if (path.empty()) return ordered_json::object();
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file \"" + path + "\"");
  ordered_json cfg;
  try {
    in >> cfg;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("config file \"" + path + "\" is not valid JSON: " + e.what());
  }
  if (!cfg.is_object()) throw std::invalid_argument("config root must be a JSON object");
  return cfg;
}

double as_number(const ordered_json& j, const std::string& what) {
  if (!j.is_number()) throw std::invalid_argument(what + " must be a number");
  return j.get<double>();
}

std::vector<double> as_number_list(const ordered_json& j, const std::string& what) {
  if (!j.is_array()) throw std::invalid_argument(what + " must be an array of numbers");
  std::vector<double> out;
  for (const auto& v : j) out.push_back(as_number(v, what + " entry"));
  return out;
}

GridConfig parse_grid(const ordered_json& cfg, std::uint64_t seed) {
  GridConfig g;
  g.seed = seed;
  if (cfg.contains("grid")) {
    const ordered_json& j = cfg.at("grid");
    if (!j.is_object()) throw std::invalid_argument("\"grid\" must be an object");
    if (j.contains("t_samples")) g.t_samples = j.at("t_samples").get<int>();
    if (j.contains("km4_samples")) g.km4_samples = j.at("km4_samples").get<int>();
    if (j.contains("include_breakpoints"))
      g.include_breakpoints = j.at("include_breakpoints").get<bool>();
  }
  return g;
}

// ---- input parsing ---------------------------------------------------------

PointSet parse_carrier(const ordered_json& j) {
  if (!j.is_object()) throw std::invalid_argument("carrier must be an object");
  if (j.contains("grid_1d")) {
    const ordered_json& g = j.at("grid_1d");
    return grid_carrier_1d(as_number(g.at("lo"), "grid_1d.lo"),
                           as_number(g.at("hi"), "grid_1d.hi"),
                           g.at("count").get<std::size_t>());
  }
  if (!j.contains("labels")) throw std::invalid_argument("carrier needs \"labels\"");
  auto labels = j.at("labels").get<std::vector<std::string>>();
  if (j.contains("coords_1d"))
    return PointSet::from_coords_1d(std::move(labels),
                                    as_number_list(j.at("coords_1d"), "coords_1d"));
  if (j.contains("coords")) {
    std::vector<std::vector<double>> coords;
    for (const auto& row : j.at("coords"))
      coords.push_back(as_number_list(row, "coords row"));
    return PointSet::from_coords(std::move(labels), std::move(coords));
  }
  return PointSet::from_labels(std::move(labels));
}

Membership parse_profile(const ordered_json& j) {
  if (!j.is_object() || !j.contains("type"))
    throw std::invalid_argument("profile must be an object with a \"type\"");
  std::string type = j.at("type").get<std::string>();
  if (type == "piecewise") {
    PiecewiseSpec spec;
    for (const auto& seg : j.at("segments"))
      spec.segments.push_back({as_number(seg.at("end"), "segment end"),
                               as_number(seg.at("v_start"), "segment v_start"),
                               as_number(seg.at("v_end"), "segment v_end")});
    spec.tail = j.value("tail", 1.0);
    return Membership::piecewise(std::move(spec));
  }
  if (type == "rational") {
    RationalSpec spec;
    spec.m = j.value("m", 1.0);
    spec.n = j.value("n", 1.0);
    spec.k = j.value("k", 1.0);
    spec.c = as_number(j.at("c"), "rational c");
    spec.scale = j.value("scale", 1.0);
    if (j.contains("cap")) spec.cap = as_number(j.at("cap"), "rational cap");
    return Membership::rational(spec);
  }
  if (type == "step") return Membership::step_at(as_number(j.at("at"), "step at"));
  if (type == "ramp") return Membership::ramp01();
  throw std::invalid_argument("unknown profile type \"" + type +
                              "\" (expected piecewise | rational | step | ramp)");
}

CrispMetric parse_metric(const ordered_json& j) {
  if (!j.is_object()) throw std::invalid_argument("\"metric\" must be an object");
  if (j.contains("rows")) {
    auto labels = j.at("labels").get<std::vector<std::string>>();
    std::vector<std::vector<double>> rows;
    for (const auto& row : j.at("rows")) rows.push_back(as_number_list(row, "metric row"));
    return CrispMetric(PointSet::from_labels(std::move(labels)), std::move(rows));
  }
  // coordinate form: Euclidean distances on the carrier
  return CrispMetric::from_euclidean(parse_carrier(j));
}

struct BuiltInput {
  std::optional<CrispMetric> metric;      // engaged for metric inputs
  std::optional<FuzzyMetricSpace> space;  // engaged unless the input is a bare metric
  ordered_json fuzzify_echo;              // kind + params when a fuzzify section ran
  // mnk parameters when the space came from the rational family (for radius
  // conversions in the balls command)
  std::optional<double> mnk_m, mnk_n, mnk_k;
  bool indicator = false;
};

BuiltInput build_input(const ordered_json& cfg, const Options& opts) {
  if (!cfg.contains("input"))
    throw std::invalid_argument("config needs an \"input\" section");
  const ordered_json& in = cfg.at("input");
  if (!in.is_object()) throw std::invalid_argument("\"input\" must be an object");
  int sources = static_cast<int>(in.contains("fixture")) +
                static_cast<int>(in.contains("metric")) +
                static_cast<int>(in.contains("pairs"));
  if (sources != 1)
    throw std::invalid_argument(
        "input needs exactly one source: \"fixture\", \"metric\", or \"pairs\"");

  BuiltInput out;
  if (in.contains("fixture")) {
    std::string id = in.at("fixture").get<std::string>();
    out.space = in.contains("carrier") ? fixture(id, parse_carrier(in.at("carrier")))
                                       : fixture(id);
    return out;
  }
  if (in.contains("pairs")) {
    if (!in.contains("carrier"))
      throw std::invalid_argument("a \"pairs\" input needs a \"carrier\"");
    PointSet carrier = parse_carrier(in.at("carrier"));
    std::vector<PairAssignment> assignments;
    for (const auto& p : in.at("pairs"))
      assignments.push_back({p.at("x").get<std::string>(), p.at("y").get<std::string>(),
                             parse_profile(p.at("profile"))});
    out.space = build_space(carrier, std::move(assignments));
    return out;
  }
  out.metric = parse_metric(in.at("metric"));
  if (in.contains("fuzzify")) {
    const ordered_json& f = in.at("fuzzify");
    std::string kind = f.at("kind").get<std::string>();
    out.fuzzify_echo["kind"] = kind;
    if (kind == "indicator") {
      out.space = indicator_fuzzify(*out.metric, opts.tol);
      out.indicator = true;
    } else if (kind == "standard" || kind == "mnk") {
      double m = kind == "standard" ? 1.0 : as_number(f.at("m"), "fuzzify m");
      double n = kind == "standard" ? 1.0 : as_number(f.at("n"), "fuzzify n");
      double k = kind == "standard" ? 1.0 : as_number(f.at("k"), "fuzzify k");
      out.space = mnk_fuzzify(*out.metric, m, n, k, opts.tol);
      out.mnk_m = m;
      out.mnk_n = n;
      out.mnk_k = k;
      out.fuzzify_echo["m"] = m;
      out.fuzzify_echo["n"] = n;
      out.fuzzify_echo["k"] = k;
    } else {
      throw std::invalid_argument("unknown fuzzify kind \"" + kind +
                                  "\" (expected indicator | standard | mnk)");
    }
  }
  return out;
}

const FuzzyMetricSpace& need_space(const BuiltInput& in, const char* cmd) {
  if (!in.space)
    throw std::invalid_argument(std::string(cmd) +
                                " needs a fuzzy space input (a fixture, a pairs table, or a "
                                "metric with a fuzzify section)");
  return *in.space;
}

// ---- output plumbing -------------------------------------------------------

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  quoted += '"';
  return quoted;
}

std::string matrix_csv(const CrispMetric& m) {
  std::string out;
  for (const auto& label : m.points().labels) out += "," + csv_field(label);
  out += "\n";
  for (std::size_t i = 0; i < m.points().size(); ++i) {
    out += csv_field(m.points().labels[i]);
    for (std::size_t j = 0; j < m.points().size(); ++j) out += "," + format_double(m.at(i, j));
    out += "\n";
  }
  return out;
}

ordered_json matrix_json(const CrispMetric& m) {
  ordered_json j;
  j["labels"] = m.points().labels;
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.points().size(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t k = 0; k < m.points().size(); ++k) row.push_back(m.at(i, k));
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

ordered_json axioms_json(const AxiomReport& rep) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : rep.entries) {
    ordered_json e;
    e["axiom"] = std::string(axiom_name(c.axiom));
    e["passed"] = c.passed;
    if (!c.witness.empty()) e["witness"] = c.witness;
    if (!c.detail.empty()) e["detail"] = c.detail;
    arr.push_back(std::move(e));
  }
  return arr;
}

ordered_json verdict_json(const ComparisonVerdict& v) {
  ordered_json j;
  j["relation"] = std::string(relation_name(v.relation));
  j["note"] = v.note;
  ordered_json ws = ordered_json::array();
  for (const auto& w : v.witnesses) {
    ordered_json e;
    e["side"] = w.side;
    e["center"] = w.center;
    e["radius"] = w.radius;
    if (w.eps) e["eps"] = *w.eps;
    e["members"] = w.members;
    e["why"] = w.why;
    ws.push_back(std::move(e));
  }
  j["witnesses"] = std::move(ws);
  return j;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write \"" + path.string() + "\"");
  out << content;
}

int finish(const Options& opts, const ordered_json& config_echo, ordered_json results,
           bool pass) {
  ordered_json rep;
  rep["tool"] = "fuzmet";
  rep["version"] = kVersion;
  rep["command"] = opts.command;
  rep["seed"] = opts.seed;
  rep["config"] = config_echo;
  rep["results"] = std::move(results);
  rep["status"] = pass ? "pass" : "violation";
  fs::create_directories(opts.out_dir);
  write_file(opts.out_dir / "report.json", rep.dump(2) + "\n");
  std::cout << opts.command << ": " << (pass ? "pass" : "violation") << "\n";
  return pass ? 0 : 1;
}

std::vector<double> effective_lambdas(const Options& opts, const ordered_json& cfg,
                                      std::vector<double> fallback) {
  if (!opts.lambda_grid.empty()) return opts.lambda_grid;
  if (cfg.contains("lambda_grid")) return as_number_list(cfg.at("lambda_grid"), "lambda_grid");
  return fallback;
}

// ---- commands --------------------------------------------------------------

int cmd_check(const Options& opts, const ordered_json& cfg) {
  BuiltInput in = build_input(cfg, opts);
  ordered_json results;
  bool pass;
  if (in.space) {
    AxiomReport rep = check_axioms(*in.space, parse_grid(cfg, opts.seed));
    results["subject"] = "fuzzy space";
    results["points"] = in.space->points().labels;
    results["axioms"] = axioms_json(rep);
    results["axioms_hold"] = rep.axioms_hold();
    results["fd_holds"] = rep.fd_holds();
    pass = rep.axioms_hold();
  } else {
    AxiomReport rep = check_metric_axioms(*in.metric, opts.tol);
    results["subject"] = "crisp metric";
    results["points"] = in.metric->points().labels;
    results["axioms"] = axioms_json(rep);
    results["axioms_hold"] = rep.all_passed();
    pass = rep.all_passed();
  }
  return finish(opts, cfg, std::move(results), pass);
}

int cmd_crispify(const Options& opts, const ordered_json& cfg) {
  BuiltInput in = build_input(cfg, opts);
  const FuzzyMetricSpace& space = need_space(in, "crispify");
  std::vector<double> lambdas = effective_lambdas(opts, cfg, {0.25, 0.5, 0.75});
  LambdaSweep sweep = lambda_sweep(space, lambdas);
  ActualMetric lim = actual_metric(space, opts.lambda_star, opts.cap);
  CrispMetric radu = radu_metric(space);

  ordered_json results;
  results["lambdas"] = sweep.lambdas;
  results["lower_le_upper"] = sweep.lower_le_upper;
  results["monotone"] = sweep.monotone;
  results["interleaved"] = sweep.interleaved;
  if (!sweep.violation.empty()) results["violation"] = sweep.violation;

  ordered_json limit;
  limit["fd"] = lim.fd;
  limit["lambda_star"] = lim.lambda_star;
  limit["cap"] = lim.cap;
  ordered_json pairs = ordered_json::array();
  const auto& labels = space.points().labels;
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = i + 1; j < space.size(); ++j) {
      const LimitEntry& e = lim.entry(i, j);
      ordered_json p;
      p["x"] = labels[i];
      p["y"] = labels[j];
      p["converged"] = e.converged;
      if (e.converged) p["value"] = e.value;
      pairs.push_back(std::move(p));
    }
  }
  limit["pairs"] = std::move(pairs);
  results["limit"] = std::move(limit);
  results["radu"] = matrix_json(radu);

  if (opts.format == "json") {
    ordered_json upper = ordered_json::array(), lower = ordered_json::array();
    for (std::size_t k = 0; k < sweep.lambdas.size(); ++k) {
      upper.push_back(matrix_json(sweep.upper[k]));
      lower.push_back(matrix_json(sweep.lower[k]));
    }
    results["upper"] = std::move(upper);
    results["lower"] = std::move(lower);
    if (lim.metric) results["limit_matrix"] = matrix_json(*lim.metric);
  } else {
    fs::create_directories(opts.out_dir);
    for (std::size_t k = 0; k < sweep.lambdas.size(); ++k) {
      std::string tag = format_double(sweep.lambdas[k]);
      write_file(opts.out_dir / ("upper_" + tag + ".csv"), matrix_csv(sweep.upper[k]));
      write_file(opts.out_dir / ("lower_" + tag + ".csv"), matrix_csv(sweep.lower[k]));
    }
    if (lim.metric) write_file(opts.out_dir / "limit.csv", matrix_csv(*lim.metric));
    write_file(opts.out_dir / "radu.csv", matrix_csv(radu));
  }
  return finish(opts, cfg, std::move(results), sweep.violation.empty());
}

int cmd_fuzzify(const Options& opts, const ordered_json& cfg) {
  BuiltInput in = build_input(cfg, opts);
  if (!in.metric || in.fuzzify_echo.empty())
    throw std::invalid_argument(
        "fuzzify needs a crisp \"metric\" input with a \"fuzzify\" section");
  const FuzzyMetricSpace& space = *in.space;
  AxiomReport rep = check_axioms(space, parse_grid(cfg, opts.seed));

  ordered_json results;
  results["fuzzify"] = in.fuzzify_echo;
  ordered_json pairs = ordered_json::array();
  const auto& labels = space.points().labels;
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = i + 1; j < space.size(); ++j) {
      const Membership& m = space.pair(i, j);
      ordered_json p;
      p["x"] = labels[i];
      p["y"] = labels[j];
      p["backend"] = std::string(m.backend_name());
      if (const RationalSpec* rs = m.rational_spec()) {
        p["c"] = rs->c;
      } else if (const PiecewiseSpec* ps = m.piecewise_spec()) {
        ordered_json segs = ordered_json::array();
        for (const auto& s : ps->segments) {
          ordered_json seg;
          seg["end"] = s.end;
          seg["v_start"] = s.v_start;
          seg["v_end"] = s.v_end;
          segs.push_back(std::move(seg));
        }
        p["segments"] = std::move(segs);
        p["tail"] = ps->tail;
      }
      pairs.push_back(std::move(p));
    }
  }
  results["pairs"] = std::move(pairs);
  results["axioms"] = axioms_json(rep);
  results["axioms_hold"] = rep.axioms_hold();
  results["fd_holds"] = rep.fd_holds();
  return finish(opts, cfg, std::move(results), rep.axioms_hold());
}

bool metrics_equal_exact(const CrispMetric& a, const CrispMetric& b) {
  if (a.points().size() != b.points().size()) return false;
  for (std::size_t i = 0; i < a.points().size(); ++i)
    for (std::size_t j = 0; j < a.points().size(); ++j)
      if (a.at(i, j) != b.at(i, j)) return false;
  return true;
}

int cmd_roundtrip(const Options& opts, const ordered_json& cfg) {
  BuiltInput in = build_input(cfg, opts);
  if (!in.metric || in.space)
    throw std::invalid_argument("roundtrip needs a bare crisp \"metric\" input");
  const CrispMetric& d = *in.metric;
  FuzzyMetricSpace space = indicator_fuzzify(d, opts.tol);
  std::vector<double> lambdas = effective_lambdas(opts, cfg, {0.1, 0.5, 0.99});

  ordered_json results;
  results["lambdas"] = lambdas;
  bool pass = true;
  ordered_json upper_eq = ordered_json::array(), lower_eq = ordered_json::array();
  for (double l : lambdas) {
    bool ue = metrics_equal_exact(upper_lambda_metric(space, l), d);
    bool le = metrics_equal_exact(lower_lambda_metric(space, l), d);
    upper_eq.push_back(ue);
    lower_eq.push_back(le);
    pass = pass && ue && le;
  }
  results["upper_equal"] = std::move(upper_eq);
  results["lower_equal"] = std::move(lower_eq);
  ActualMetric lim = actual_metric(space);
  bool limit_eq = lim.fd && metrics_equal_exact(*lim.metric, d);
  results["limit_equal"] = limit_eq;
  pass = pass && limit_eq;
  return finish(opts, cfg, std::move(results), pass);
}

// Ball-membership table over the sample for one family, as CSV and JSON.
struct FamilyTable {
  std::string csv;
  ordered_json rows = ordered_json::array();
};

FamilyTable ball_table(const BallFamily& fam, const PointSet& sample, const BallGrids& grids) {
  FamilyTable t;
  t.csv = "center,radius,eps";
  for (const auto& label : sample.labels) t.csv += "," + csv_field(label);
  t.csv += "\n";
  auto add_row = [&](const std::string& center, double radius, std::optional<double> eps,
                     const std::vector<bool>& mask) {
    t.csv += csv_field(center) + "," + format_double(radius) + "," +
             (eps ? format_double(*eps) : std::string());
    ordered_json row;
    row["center"] = center;
    row["radius"] = radius;
    if (eps) row["eps"] = *eps;
    ordered_json members = ordered_json::array();
    for (std::size_t j = 0; j < mask.size(); ++j) {
      t.csv += mask[j] ? ",1" : ",0";
      if (mask[j]) members.push_back(sample.labels[j]);
    }
    row["members"] = std::move(members);
    t.csv += "\n";
    t.rows.push_back(std::move(row));
  };

  std::size_t n = sample.size();
  if (fam.is_crisp()) {
    const CrispMetric& d = std::get<CrispMetric>(fam.source);
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto at = d.points().index_of(sample.labels[i]);
      if (!at)
        throw std::invalid_argument("sample label \"" + sample.labels[i] +
                                    "\" is not in the metric's carrier");
      idx[i] = *at;
    }
    const std::vector<double>& radii = fam.crisp_radii.empty() ? grids.radii : fam.crisp_radii;
    for (std::size_t c = 0; c < n; ++c) {
      for (double s : radii) {
        std::vector<bool> mask(n);
        for (std::size_t j = 0; j < n; ++j) mask[j] = d.at(idx[c], idx[j]) < s;
        add_row(sample.labels[c], s, std::nullopt, mask);
      }
    }
  } else {
    const FuzzyMetricSpace& sp = std::get<FuzzyMetricSpace>(fam.source);
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto at = sp.points().index_of(sample.labels[i]);
      if (!at)
        throw std::invalid_argument("sample label \"" + sample.labels[i] +
                                    "\" is not in the space's carrier");
      idx[i] = *at;
    }
    std::vector<FuzzyBallParams> params = fam.fuzzy_params;
    if (params.empty())
      for (double r : grids.radii)
        for (double e : grids.epsilons) params.push_back({r, e});
    for (std::size_t c = 0; c < n; ++c) {
      for (const auto& p : params) {
        std::vector<bool> mask(n);
        for (std::size_t j = 0; j < n; ++j) mask[j] = sp.eval(idx[c], idx[j], p.r) > 1.0 - p.eps;
        add_row(sample.labels[c], p.r, p.eps, mask);
      }
    }
  }
  return t;
}

int cmd_balls(const Options& opts, const ordered_json& cfg) {
  BuiltInput in = build_input(cfg, opts);
  ordered_json bcfg = cfg.value("balls", ordered_json::object());
  std::string mode = bcfg.value("mode", std::string("roundtrip"));

  BallGrids grids = default_ball_grids();
  if (bcfg.contains("radii")) grids.radii = as_number_list(bcfg.at("radii"), "balls.radii");
  if (bcfg.contains("epsilons"))
    grids.epsilons = as_number_list(bcfg.at("epsilons"), "balls.epsilons");

  ordered_json results;
  results["mode"] = mode;

  if (mode == "refinement") {
    const FuzzyMetricSpace& space = need_space(in, "balls (refinement mode)");
    PointSet sample =
        bcfg.contains("sample") ? parse_carrier(bcfg.at("sample")) : space.points();
    ComparisonVerdict v = check_refinement_thm47(space, sample, grids.radii, grids.epsilons);
    results["verdict"] = verdict_json(v);
    bool pass = v.relation != BallRelation::incomparable;
    if (opts.format == "csv") {
      fs::create_directories(opts.out_dir);
      ActualMetric lim = actual_metric(space);
      BallFamily left = BallFamily::of_metric(*lim.metric, grids.radii);
      BallFamily right = BallFamily::of_space(space);
      write_file(opts.out_dir / "balls_left.csv", ball_table(left, sample, grids).csv);
      write_file(opts.out_dir / "balls_right.csv", ball_table(right, sample, grids).csv);
    }
    return finish(opts, cfg, std::move(results), pass);
  }

  BallFamily left = [&]() -> BallFamily {
    if (mode == "convert" || mode == "roundtrip") {
      const FuzzyMetricSpace& space = need_space(in, "balls");
      if (mode == "roundtrip") {
        ActualMetric lim = actual_metric(space);
        if (!lim.fd)
          throw std::invalid_argument(
              "balls roundtrip mode needs a space whose limit metric converges");
        return BallFamily::of_space(indicator_fuzzify(*lim.metric, opts.tol));
      }
      return BallFamily::of_space(space);
    }
    throw std::invalid_argument("unknown balls mode \"" + mode +
                                "\" (expected convert | roundtrip | refinement)");
  }();

  BallFamily right = [&]() -> BallFamily {
    if (mode == "roundtrip") return BallFamily::of_space(*in.space);
    // convert: crisp side with radii converted per (r, eps) cell
    if (!in.metric)
      throw std::invalid_argument("balls convert mode needs a metric input with fuzzify");
    std::vector<double> converted;
    for (double r : grids.radii) {
      for (double e : grids.epsilons) {
        if (in.indicator)
          converted.push_back(r);
        else if (in.mnk_m)
          converted.push_back(fuzzy_to_crisp_radius(*in.mnk_m, *in.mnk_n, *in.mnk_k, r, e));
        else
          throw std::invalid_argument(
              "balls convert mode needs an indicator or mnk/standard fuzzify section");
      }
    }
    return BallFamily::of_metric(*in.metric, std::move(converted));
  }();

  const PointSet& carrier =
      left.is_crisp() ? std::get<CrispMetric>(left.source).points()
                      : std::get<FuzzyMetricSpace>(left.source).points();
  PointSet sample = bcfg.contains("sample") ? parse_carrier(bcfg.at("sample")) : carrier;

  ComparisonVerdict v = compare_ball_families(left, right, sample, grids);
  results["verdict"] = verdict_json(v);
  FamilyTable lt = ball_table(left, sample, grids);
  FamilyTable rt = ball_table(right, sample, grids);
  if (opts.format == "json") {
    results["left_balls"] = std::move(lt.rows);
    results["right_balls"] = std::move(rt.rows);
  } else {
    fs::create_directories(opts.out_dir);
    write_file(opts.out_dir / "balls_left.csv", lt.csv);
    write_file(opts.out_dir / "balls_right.csv", rt.csv);
  }
  bool pass = v.relation != BallRelation::incomparable;
  return finish(opts, cfg, std::move(results), pass);
}

int cmd_catalog_list(const Options& opts, const ordered_json& cfg) {
  ordered_json results;
  ordered_json fixtures = ordered_json::array();
  for (const auto& e : catalog_entries()) {
    ordered_json f;
    f["id"] = e.id;
    f["description"] = e.description;
    f["needs_coords"] = e.needs_coords;
    f["default_carrier"] = default_carrier(e.id).labels;
    fixtures.push_back(std::move(f));
    std::cout << "  " << e.id << "  " << e.description << "\n";
  }
  results["fixtures"] = std::move(fixtures);
  results["parameterized"] = {
      "standard: t/(t + d) over a crisp metric d (rational family with m=n=k=1)",
      "indicator: {0,1}-valued step fuzzification of a crisp metric",
      "mnk: k*t^n / (k*t^n + m*d) over a crisp metric d"};
  return finish(opts, cfg, std::move(results), true);
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"fuzzy metric space toolkit: crispify, fuzzify, verify, compare"};
  app.require_subcommand(1);

  std::string config_path;
  Options opts;
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--out", opts.out_dir, "output directory for reports and CSV files");
  app.add_option("--format", opts.format, "matrix output: csv files or embedded json")
      ->check(CLI::IsMember({"csv", "json"}));
  auto* seed_opt = app.add_option("--seed", opts.seed, "seed for sampling grids");
  auto* lg_opt = app.add_option("--lambda-grid", opts.lambda_grid,
                                "comma-separated lambda values in (0,1)")
                     ->delimiter(',');
  auto* cap_opt = app.add_option("--cap", opts.cap, "search cap for limit computations");
  auto* tol_opt =
      app.add_option("--tol", opts.tol, "triangle slack for crisp-metric validation");
  app.add_flag("--timings", opts.timings, "print phase timings to stderr");

  for (const char* name : {"check", "crispify", "fuzzify", "roundtrip", "balls"})
    app.add_subcommand(name)->fallthrough();
  app.add_subcommand("catalog-list")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    ordered_json cfg = load_config(config_path);
    // flags override config keys
    if (cfg.contains("out") && opts.out_dir == ".")
      opts.out_dir = cfg.at("out").get<std::string>();
    if (cfg.contains("format") && opts.format == "csv")
      opts.format = cfg.at("format").get<std::string>();
    if (!seed_opt->count() && cfg.contains("seed"))
      opts.seed = cfg.at("seed").get<std::uint64_t>();
    if (!lg_opt->count() && cfg.contains("lambda_grid"))
      opts.lambda_grid = as_number_list(cfg.at("lambda_grid"), "lambda_grid");
    if (!cap_opt->count() && cfg.contains("cap")) opts.cap = as_number(cfg.at("cap"), "cap");
    if (!tol_opt->count() && cfg.contains("tol")) opts.tol = as_number(cfg.at("tol"), "tol");
    if (cfg.contains("lambda_star"))
      opts.lambda_star = as_number(cfg.at("lambda_star"), "lambda_star");

    opts.command = app.get_subcommands().front()->get_name();
    auto started = std::chrono::steady_clock::now();
    int rc;
    if (opts.command == "check") rc = cmd_check(opts, cfg);
    else if (opts.command == "crispify") rc = cmd_crispify(opts, cfg);
    else if (opts.command == "fuzzify") rc = cmd_fuzzify(opts, cfg);
    else if (opts.command == "roundtrip") rc = cmd_roundtrip(opts, cfg);
    else if (opts.command == "balls") rc = cmd_balls(opts, cfg);
    else rc = cmd_catalog_list(opts, cfg);
    if (opts.timings) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - started)
                    .count();
      std::cerr << opts.command << " took " << ms << " ms\n";
    }
    return rc;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace fuzmet
