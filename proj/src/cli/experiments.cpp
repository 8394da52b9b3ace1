// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "lowmach/cli/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "lowmach/acoustic/acoustic.hpp"
#include "lowmach/dispersion/bogoliubov.hpp"
#include "lowmach/dispersion/decay.hpp"
#include "lowmach/dispersion/oscillatory.hpp"
#include "lowmach/dispersion/strichartz.hpp"
#include "lowmach/fit.hpp"
#include "lowmach/io/csv.hpp"
#include "lowmach/limit/data.hpp"
#include "lowmach/limit/exponents.hpp"
#include "lowmach/limit/ns_solver.hpp"
#include "lowmach/limit/study.hpp"
#include "lowmach/qns/solver.hpp"
#include "lowmach/spectral/helmholtz.hpp"
#include "lowmach/spectral/littlewood_paley.hpp"
#include "lowmach/spectral/multiplier.hpp"
#include "lowmach/spectral/norms.hpp"
#include "lowmach/spectral/operators.hpp"

namespace lowmach
{

using json = nlohmann::json;

namespace
{

// Reads typed entries from one JSON object, records what was used and rejects the rest.
class Params
{
public:
  Params(const json &j, std::string scope) : j_(j.is_null() ? json::object() : j), scope_(std::move(scope))
  {
    if (!j_.is_object())
      throw ConfigError(scope_, "expected an object");
  }

  double num(const std::string &key, double def)
  {
    const json *v = find(key);
    double out = def;
    if (v)
    {
      if (v->is_string() && (*v == "inf" || *v == "infinity"))
        out = kInf;
      else if (v->is_number())
        out = v->get<double>();
      else
        throw ConfigError(name(key), "expected a number");
    }
    resolved_[key] = std::isinf(out) ? json("inf") : json(out);
    return out;
  }

  int integer(const std::string &key, int def)
  {
    const json *v = find(key);
    int out = def;
    if (v)
    {
      if (!v->is_number_integer())
        throw ConfigError(name(key), "expected an integer");
      out = v->get<int>();
    }
    resolved_[key] = out;
    return out;
  }

  bool flag(const std::string &key, bool def)
  {
    const json *v = find(key);
    bool out = def;
    if (v)
    {
      if (!v->is_boolean())
        throw ConfigError(name(key), "expected true or false");
      out = v->get<bool>();
    }
    resolved_[key] = out;
    return out;
  }

  std::string str(const std::string &key, const std::string &def)
  {
    const json *v = find(key);
    std::string out = def;
    if (v)
    {
      if (!v->is_string())
        throw ConfigError(name(key), "expected a string");
      out = v->get<std::string>();
    }
    resolved_[key] = out;
    return out;
  }

  std::vector<double> nums(const std::string &key, std::vector<double> def)
  {
    const json *v = find(key);
    if (v)
    {
      if (!v->is_array() || v->empty())
        throw ConfigError(name(key), "expected a nonempty list of numbers");
      def.clear();
      for (const auto &e : *v)
      {
        if (!e.is_number())
          throw ConfigError(name(key), "expected a nonempty list of numbers");
        def.push_back(e.get<double>());
      }
    }
    resolved_[key] = def;
    return def;
  }

  std::vector<int> ints(const std::string &key, std::vector<int> def)
  {
    const json *v = find(key);
    if (v)
    {
      if (!v->is_array() || v->empty())
        throw ConfigError(name(key), "expected a nonempty list of integers");
      def.clear();
      for (const auto &e : *v)
      {
        if (!e.is_number_integer())
          throw ConfigError(name(key), "expected a nonempty list of integers");
        def.push_back(e.get<int>());
      }
    }
    resolved_[key] = def;
    return def;
  }

  // Raw sub-document, consumed as is.
  json raw(const std::string &key, json def)
  {
    const json *v = find(key);
    json out = v ? *v : std::move(def);
    resolved_[key] = out;
    return out;
  }

  void require(bool ok, const std::string &key, const std::string &what) const
  {
    if (!ok)
      throw ConfigError(name(key), what);
  }

  // Throws on any key that was never read.
  void finish() const
  {
    for (const auto &[k, v] : j_.items())
      if (!used_.count(k))
        throw ConfigError(name(k), "unknown key");
  }

  const json &resolved() const { return resolved_; }
  std::string name(const std::string &key) const { return scope_.empty() ? key : scope_ + "." + key; }

private:
  const json *find(const std::string &key)
  {
    used_.insert(key);
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  json j_;
  std::string scope_;
  std::set<std::string> used_;
  json resolved_ = json::object();
};

// Collects checks and artifacts for one run.
class Report
{
public:
  Report(const ExperimentConfig &cfg) : cfg_(cfg)
  {
    if (!cfg.out_dir.empty())
      std::filesystem::create_directories(cfg.out_dir);
  }

  void check(const std::string &id, double value, const std::string &bound, bool pass)
  {
    checks_.push_back({{"id", id}, {"value", finite_or_null(value)}, {"bound", bound}, {"pass", pass}});
    ok_ = ok_ && pass;
  }

  bool writing() const { return !cfg_.out_dir.empty(); }
  std::string path(const std::string &file) const { return (std::filesystem::path(cfg_.out_dir) / file).string(); }
  void artifact(const std::string &file) { artifacts_.push_back(file); }

  void xy(const std::string &file, const std::vector<double> &x, const std::vector<double> &y)
  {
    if (!writing())
      return;
    write_xy(path(file), x, y);
    artifact(file);
  }

  static json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

  json &results() { return results_; }
  void abort(const std::string &message, double time, const std::string &snapshot)
  {
    aborted_ = true;
    results_["abort"] = {{"message", message}, {"time", time}, {"snapshot", snapshot}};
  }

  ExperimentResult finish(const json &resolved)
  {
    ExperimentResult r;
    r.summary = {{"command", cfg_.command}, {"params", resolved}, {"seed", cfg_.seed},
                 {"threads", cfg_.threads}, {"results", results_}, {"checks", checks_},
                 {"artifacts", artifacts_}, {"ok", ok_ && !aborted_}};
    r.exit_code = aborted_ ? kExitAbort : (ok_ ? kExitOk : kExitInvariant);
    if (writing())
    {
      std::ofstream out(path("summary.json"));
      out << r.summary.dump(2) << "\n";
    }
    return r;
  }

private:
  const ExperimentConfig &cfg_;
  json results_ = json::object();
  json checks_ = json::array();
  std::vector<std::string> artifacts_;
  bool ok_ = true;
  bool aborted_ = false;
};

// Studies picked by the "study" entry; "all" expands to every known one.
std::vector<std::string> pick_studies(Params &top, const std::vector<std::string> &known,
                                      const std::vector<std::string> &defaults)
{
  json sel = top.raw("study", json(defaults));
  std::vector<std::string> out;
  if (sel.is_string())
    sel = json::array({sel});
  top.require(sel.is_array() && !sel.empty(), "study", "expected a study name or a list of names");
  for (const auto &s : sel)
  {
    top.require(s.is_string(), "study", "expected a study name or a list of names");
    const std::string name = s.get<std::string>();
    if (name == "all")
      return known;
    top.require(std::find(known.begin(), known.end(), name) != known.end(), "study",
                "unknown study '" + name + "'");
    out.push_back(name);
  }
  return out;
}

std::string num_str(double v)
{
  std::ostringstream os;
  os << v;
  return os.str();
}

std::vector<double> time_grid(double t_end, int samples)
{
  std::vector<double> t;
  for (int i = 0; i < samples; i++)
    t.push_back(t_end * i / (samples - 1));
  return t;
}

// Smooth random field, low-passed at `cutoff` and optionally mean-free.
RealField random_smooth(const SpectralGrid &g, int components, std::mt19937_64 &rng, double cutoff,
                        bool mean_zero)
{
  std::normal_distribution<double> nd;
  std::vector<RealField> parts;
  for (int c = 0; c < components; c++)
  {
    RealField f = RealField::scalar(g);
    for (auto &v : f.values())
      v = nd(rng);
    f = lp_lowpass(f, cutoff);
    if (mean_zero)
    {
      const double m = mean(f);
      for (auto &v : f.values())
        v -= m;
    }
    double mx = 0.0;
    for (double v : f.values())
      mx = std::max(mx, std::abs(v));
    f *= 1.0 / mx;
    parts.push_back(std::move(f));
  }
  return stack(parts);
}

double rel_l2(const RealField &a, const RealField &b)
{
  RealField d = a;
  d -= b;
  const double n = l2_norm(b);
  return n > 0.0 ? l2_norm(d) / n : l2_norm(d);
}

double rel_l2(const ComplexField &a, const ComplexField &b)
{
  ComplexField d = a;
  d -= b;
  const double n = l2_norm(b);
  return n > 0.0 ? l2_norm(d) / n : l2_norm(d);
}

double max_abs_diff(const RealField &a, const RealField &b)
{
  double mx = 0.0;
  for (std::size_t i = 0; i < a.values().size(); i++)
    mx = std::max(mx, std::abs(a.values()[i] - b.values()[i]));
  return mx;
}

SpectralGrid grid_from(Params &pp, int dim_def, int n_def, double len_def)
{
  const int dim = pp.integer("dim", dim_def);
  const int n = pp.integer("points", n_def);
  const double len = pp.num("length", len_def);
  pp.require(dim >= 1 && dim <= 3, "dim", "must be 1, 2 or 3");
  pp.require(n >= 4 && n % 2 == 0, "points", "must be even and >= 4");
  pp.require(len > 0.0, "length", "must be positive");
  return SpectralGrid::cube(dim, n, len);
}

void write_fit(Report &rep, const std::string &file, const std::vector<DecayFit> &fits)
{
  if (!rep.writing())
    return;
  CsvWriter w(rep.path(file), {"d", "eps", "kappa", "R", "t_min", "t_max", "slope", "prefactor", "residual"});
  for (const auto &f : fits)
    w.row({static_cast<long long>(f.d), f.params.eps, f.params.kappa, f.R, f.t_min(), f.t_max(), f.slope,
           f.prefactor, f.residual});
  rep.artifact(file);
}

//
// dispersion
//

void study_decay(Params pp, Report &rep)
{
  const int d = pp.integer("d", 3);
  const double eps = pp.num("eps", 1.0), kappa = pp.num("kappa", 1.0), R = pp.num("R", 1.0);
  const std::string backend = pp.str("backend", d == 3 ? "radial" : "grid");
  const double t_min = pp.num("t_min", 5.0), t_max = pp.num("t_max", 50.0);
  const int samples = pp.integer("samples", 12);
  const double tol = pp.num("slope_tol", 0.1);
  pp.require(d == 2 || d == 3, "d", "must be 2 or 3");
  pp.require(eps > 0.0 && kappa > 0.0 && R > 0.0, "eps", "eps, kappa and R must be positive");
  pp.require(t_min > 0.0 && t_max > t_min, "t_max", "need 0 < t_min < t_max");
  pp.require(samples >= 3, "samples", "need at least three samples");
  pp.require(backend == "grid" || backend == "radial", "backend", "must be grid or radial");
  pp.require(backend == "grid" || d == 3, "backend", "the radial backend is three-dimensional");
  const DispersionParams p{eps, kappa};
  const auto times = log_grid(t_min, t_max, samples);
  DecayFit fit;
  if (backend == "grid")
  {
    const int n = pp.integer("points", d == 3 ? 256 : 2048);
    const double len = pp.num("length", 402.0);
    pp.require(n >= 4 && n % 2 == 0, "points", "must be even and >= 4");
    pp.require(len > 0.0, "length", "must be positive");
    pp.finish();
    fit = measure_decay(R, p, times, SpectralGrid::cube(d, n, len));
  }
  else
  {
    pp.finish();
    fit = measure_decay(R, p, times, radial_grid_for(R, p, t_max));
  }
  const double target = -0.5 * d;
  rep.results()["decay"] = {{"params", pp.resolved()}, {"slope", fit.slope}, {"prefactor", fit.prefactor},
                            {"residual", fit.residual}, {"target_slope", target}};
  rep.check("decay.slope", fit.slope, "|slope + d/2| <= " + num_str(tol) + " d/2",
            std::abs(fit.slope - target) <= tol * std::abs(target));
  write_fit(rep, "dispersion_decay.csv", {fit});
  rep.xy("dispersion_decay_sup.dat", fit.times, fit.sup_values);
}

void study_eps_gain(Params pp, Report &rep)
{
  const double R = pp.num("R", 0.1), kappa = pp.num("kappa", 1.0);
  const auto eps = pp.nums("eps", {1.0, 0.5, 0.25, 0.125});
  const double onset = pp.num("onset_factor", 30.0);
  const int samples = pp.integer("samples", 8);
  const double lo = pp.num("delta_min", 0.375), hi = pp.num("delta_max", 0.625);
  pp.finish();
  for (double e : eps)
    pp.require(e > 0.0 && e * kappa * R <= 0.1 + 1e-12, "eps", "need eps kappa R <= 0.1 on the low shell");
  const EpsGainReport g = measure_eps_gain(R, kappa, eps, onset, samples);
  rep.results()["eps_gain"] = {{"params", pp.resolved()}, {"delta", g.delta}, {"residual", g.residual},
                               {"prefactors", g.prefactors}, {"target_delta", 0.5}};
  rep.check("eps_gain.delta", g.delta, "[" + num_str(lo) + ", " + num_str(hi) + "]",
            g.delta >= lo && g.delta <= hi);
  write_fit(rep, "dispersion_eps_gain.csv", g.fits);
  rep.xy("dispersion_eps_gain.dat", g.eps, g.prefactors);
}

void study_scaling(Params pp, Report &rep, std::uint64_t seed)
{
  const int tuples = pp.integer("tuples", 20);
  const auto dims = pp.ints("dims", {2, 3});
  const auto eps = pp.nums("eps", {1.0, 0.5, 0.25});
  const double kappa = pp.num("kappa", 1.0);
  const double t_max = pp.num("t_max", 5.0), x_max = pp.num("x_max", 4.0);
  const auto shells = pp.nums("R", {0.5, 1.0, 2.0});
  const double tol = pp.num("tol", 1e-8);
  const int panels = pp.integer("panels", 2000);
  pp.finish();
  pp.require(tuples >= 1, "tuples", "must be positive");
  for (int d : dims)
    pp.require(d >= 1 && d <= 3, "dims", "entries must be 1, 2 or 3");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ut(0.0, t_max), ux(0.0, x_max);
  std::uniform_int_distribution<std::size_t> ue(0, eps.size() - 1), ur(0, shells.size() - 1);
  double worst = 0.0;
  json rows = json::array();
  std::unique_ptr<CsvWriter> w;
  if (rep.writing())
  {
    w = std::make_unique<CsvWriter>(rep.path("dispersion_scaling.csv"),
                                    std::vector<std::string>{"d", "t", "x", "R", "eps", "lhs_re", "lhs_im",
                                                             "rhs_re", "rhs_im", "abs_diff"});
    rep.artifact("dispersion_scaling.csv");
  }
  std::vector<double> idx, diffs;
  for (int k = 0; k < tuples; k++)
  {
    const int d = dims[k % dims.size()];
    const double t = ut(rng), x = ux(rng), e = eps[ue(rng)], R = shells[ur(rng)];
    const auto lhs = oscillatory_integral(t, x, R, {e, kappa}, d, 1e-10);
    const auto rhs =
      std::pow(e, -d) * oscillatory_integral_panels(t / (e * e), x / e, e * R, {1.0, kappa}, d, panels);
    const double diff = std::abs(lhs - rhs);
    worst = std::max(worst, diff);
    idx.push_back(k);
    diffs.push_back(diff);
    if (w)
      w->row({static_cast<long long>(d), t, x, R, e, lhs.real(), lhs.imag(), rhs.real(), rhs.imag(), diff});
  }
  rep.results()["scaling_identity"] = {{"params", pp.resolved()}, {"max_abs_diff", worst}};
  rep.check("scaling_identity.max_abs_diff", worst, "<= " + num_str(tol), worst <= tol);
  rep.xy("dispersion_scaling.dat", idx, diffs);
}

void study_h_bound(Params pp, Report &rep)
{
  const double kappa = pp.num("kappa", 1.0);
  const double lo = pp.num("lambda_min", 1e-4), hi = pp.num("lambda_max", 1e4);
  const int n = pp.integer("points", 801);
  pp.finish();
  pp.require(lo > 0.0 && hi > lo, "lambda_max", "need 0 < lambda_min < lambda_max");
  pp.require(n >= 3, "points", "need at least three points");
  const auto grid = log_grid(lo, hi, n);
  json out;
  for (int d : {2, 3})
  {
    const HBoundReport r = h_bound_check(grid, kappa, d);
    const std::string tag = "d" + std::to_string(d);
    out[tag] = {{"max_ratio", r.max_ratio}, {"witness", r.witness}, {"refinement_change", r.refinement_change},
                {"min_inv_sqrt_h", r.min_inv_sqrt_h}, {"max_inv_sqrt_h", r.max_inv_sqrt_h}};
    if (d == 2)
    {
      rep.check("h_bound.d2.min_inv_sqrt_h", r.min_inv_sqrt_h, ">= 0.5 - 1e-3", r.min_inv_sqrt_h >= 0.5 - 1e-3);
      rep.check("h_bound.d2.max_inv_sqrt_h", r.max_inv_sqrt_h, "<= 3^-1/2 + 1e-3",
                r.max_inv_sqrt_h <= 1.0 / std::sqrt(3.0) + 1e-3);
    }
    else
    {
      rep.check("h_bound.d3.refinement_change", r.refinement_change, "< 0.05 with a finite ratio",
                r.finite && r.stable);
    }
    std::vector<double> inv;
    for (double l : grid)
      inv.push_back(1.0 / std::sqrt(hessian_det(l, {1.0, kappa}, d)));
    rep.xy("dispersion_h_" + tag + ".dat", grid, inv);
  }
  out["params"] = pp.resolved();
  rep.results()["h_bound"] = out;
}

void run_dispersion(Params &top, Report &rep, const ExperimentConfig &cfg)
{
  const auto studies = pick_studies(top, {"decay", "eps_gain", "scaling_identity", "h_bound"},
                                    {"decay", "eps_gain", "scaling_identity", "h_bound"});
  std::map<std::string, json> sub;
  for (const auto &s : studies)
    sub[s] = top.raw(s, json::object());
  top.finish();
  for (const auto &s : studies)
  {
    Params pp(sub[s], s);
    if (s == "decay")
      study_decay(std::move(pp), rep);
    else if (s == "eps_gain")
      study_eps_gain(std::move(pp), rep);
    else if (s == "scaling_identity")
      study_scaling(std::move(pp), rep, cfg.seed);
    else
      study_h_bound(std::move(pp), rep);
  }
}

//
// strichartz
//

// [p, q] or [p, q, alpha]; p may be "inf".
std::pair<AdmissiblePair, double> parse_pair(const json &j, int d, double alpha, const std::string &key)
{
  if (!j.is_array() || j.size() < 2 || j.size() > 3)
    throw ConfigError(key, "pairs are [p, q] or [p, q, alpha] with numbers or \"inf\"");
  auto get = [&](const json &e) {
    if (e.is_string() && e == "inf")
      return kInf;
    if (!e.is_number())
      throw ConfigError(key, "pairs are [p, q] or [p, q, alpha] with numbers or \"inf\"");
    return e.get<double>();
  };
  AdmissiblePair a{get(j[0]), get(j[1]), d};
  if (!is_admissible(a))
    throw ConfigError(key, "pair is not admissible");
  if (j.size() == 3)
    alpha = get(j[2]);
  if (!(alpha >= 0.0) || std::isinf(alpha))
    throw ConfigError(key, "alpha must be finite and nonnegative");
  return {a, alpha};
}

// Mean-free Mexican hat of width w at the box centre.
RealField centred_packet(const SpectralGrid &g, double w)
{
  const int d = g.dim();
  return sample<double>(g, [&](const auto &x) {
    double r2 = 0.0;
    for (int a = 0; a < d; a++)
    {
      const double y = x[a] - 0.5 * g.length(a);
      r2 += y * y;
    }
    return (1.0 - r2 / (d * w * w)) * std::exp(-0.5 * r2 / (w * w));
  });
}

void run_strichartz(Params &top, Report &rep, const ExperimentConfig &cfg)
{
  const auto studies = pick_studies(top, {"homogeneous", "duhamel"}, {"homogeneous", "duhamel"});
  std::map<std::string, json> sub;
  for (const auto &s : studies)
    sub[s] = top.raw(s, json::object());
  top.finish();
  for (const auto &s : studies)
  {
    Params pp(sub[s], s);
    const SpectralGrid g = grid_from(pp, 3, 64, 8.0 * std::numbers::pi);
    const double kappa = pp.num("kappa", 1.0);
    const double alpha = pp.num("alpha", 0.1);
    const double t_end = pp.num("t_end", 1.0);
    const int samples = pp.integer("samples", 41);
    const auto eps = pp.nums("eps", {1.0, 0.5, 0.25, 0.125});
    const std::string datum = pp.str("datum", "packet");
    const double width = pp.num("width", 1.5);
    const json pairs = pp.raw("pairs", json::array({json::array({"inf", 2, 0}), json::array({2, 6}),
                                                    json::array({8.0 / 3.0, 4})}));
    pp.finish();
    pp.require(pairs.is_array() && !pairs.empty(), "pairs", "expected a list of [p, q]");
    pp.require(samples >= 2 && t_end > 0.0, "samples", "need at least two samples over a positive window");
    pp.require(datum == "packet" || datum == "random", "datum", "must be packet or random");
    pp.require(width > 0.0, "width", "must be positive");
    std::mt19937_64 rng(cfg.seed);
    const RealField f = datum == "packet" ? centred_packet(g, width) : random_smooth(g, 1, rng, 1.0, true);
    const auto times = time_grid(t_end, samples);
    json out = json::array();
    std::unique_ptr<CsvWriter> w;
    const std::string file = "strichartz_" + s + ".csv";
    if (rep.writing())
    {
      w = std::make_unique<CsvWriter>(rep.path(file), std::vector<std::string>{"p", "q", "d", "alpha", "eps",
                                                                               "lhs", "rhs", "ratio"});
      rep.artifact(file);
    }
    for (const auto &pj : pairs)
    {
      const auto [a, al] = parse_pair(pj, g.dim(), alpha, pp.name("pairs"));
      const StrichartzReport r = s == "homogeneous" ? strichartz_probe(f, kappa, a, al, times, eps)
                                                    : strichartz_probe_duhamel(f, kappa, a, al, times, eps);
      const std::string tag = s + ".(" + (std::isinf(a.p) ? std::string("inf") : num_str(a.p)) + "," +
                              num_str(a.q) + ")";
      out.push_back({{"p", Report::finite_or_null(a.p)}, {"q", a.q}, {"alpha", al}, {"ratio", r.ratio},
                     {"max_ratio", r.max_ratio}, {"trend", r.trend}});
      rep.check(tag + ".bounded", r.max_ratio, "finite", std::isfinite(r.max_ratio));
      rep.check(tag + ".trend", r.trend, ">= -0.05 (ratio not growing as eps decreases)", r.non_increasing);
      for (std::size_t i = 0; i < r.eps.size(); i++)
        if (w)
          w->row({a.p, a.q, static_cast<long long>(a.d), al, r.eps[i], r.lhs[i], r.rhs[i], r.ratio[i]});
      if (&pj == &pairs.front())
        rep.xy("strichartz_" + s + ".dat", r.eps, r.ratio);
    }
    rep.results()[s] = {{"params", pp.resolved()}, {"pairs", out}};
  }
}

//
// qns
//

FluidParams fluid_from(Params &pp, double eps_def)
{
  FluidParams p;
  p.eps = pp.num("eps", eps_def);
  p.nu = pp.num("nu", 0.1);
  p.kappa = pp.num("kappa", 0.05);
  p.gamma = pp.num("gamma", 2.0);
  p.delta_reg = pp.num("delta", 0.0);
  try
  {
    p.validate();
  }
  catch (const InvalidInput &e)
  {
    throw ConfigError(pp.name("eps"), e.what());
  }
  return p;
}

struct TrajectoryOutcome
{
  QnsResult run;
  double energy0 = 0.0;
  double bd0 = 0.0;
};

void study_trajectory(Params pp, Report &rep, const ExperimentConfig &cfg)
{
  const SpectralGrid g = grid_from(pp, 2, 256, 48.0);
  const FluidParams p = fluid_from(pp, 0.1);
  const DataKind kind = [&] {
    const std::string k = pp.str("data", "ill_prepared");
    try
    {
      return parse_data_kind(k);
    }
    catch (const InvalidInput &e)
    {
      throw ConfigError(pp.name("data"), e.what());
    }
  }();
  const double amp = pp.num("amplitude", 1.0), width = pp.num("width", 1.0);
  QnsOptions opt;
  opt.t_end = pp.num("t_end", 1.0);
  opt.sample_every = pp.num("sample_every", 0.05);
  opt.energy_tol = pp.num("energy_tol", 1e-4);
  opt.dt.dt_max = pp.num("dt_max", 0.005);
  opt.dt.fixed_dt = pp.num("fixed_dt", 0.0);
  const bool refine = pp.flag("refine", false);
  const double slack_tol = pp.num("slack_tol", 1e-3);
  pp.finish();
  pp.require(g.dim() >= 2, "dim", "the fluid runs need d = 2 or 3");
  if (!cfg.out_dir.empty())
    opt.abort_dir = (std::filesystem::path(cfg.out_dir) / "abort").string();
  InitialData data;
  try
  {
    data = make_data(kind, amp, p.eps, p.gamma, g, p.kappa, width);
  }
  catch (const InvalidInput &e)
  {
    throw ConfigError(pp.name("amplitude"), e.what());
  }

  auto run_with = [&](double fixed) {
    QnsOptions o = opt;
    if (fixed > 0.0)
      o.dt.fixed_dt = fixed;
    return qns_solve(data.state, p, o);
  };
  const QnsResult run = run_with(opt.dt.fixed_dt);
  const auto &s0 = run.series.front();
  const double e0 = s0.energy;
  const double mass_drift = std::abs(run.series.back().mass - s0.mass) / s0.mass;
  json res = {{"params", pp.resolved()},          {"steps", run.steps},
              {"energy0", e0},                    {"bd0", s0.bd},
              {"bd_c", run.bd_c},                 {"energy_slack", run.energy_slack()},
              {"bd_slack", run.bd_slack()},       {"mass_drift", mass_drift},
              {"lower_bound_ok", run.lower_bound_ok}, {"final_energy", run.series.back().energy},
              {"final_dissipation", run.series.back().dissipation}};
  rep.check("qns.mass_drift", mass_drift, "<= 1e-10", mass_drift <= 1e-10);
  rep.check("qns.energy_slack", run.energy_slack(), "<= slack_tol E(0)", run.energy_slack() <= slack_tol * e0);
  rep.check("qns.bd_slack", run.bd_slack(), "<= slack_tol E(0)", run.bd_slack() <= slack_tol * e0);
  rep.check("qns.lower_bound", run.lower_bound_ok ? 1.0 : 0.0, "holds at every step", run.lower_bound_ok);
  if (refine)
  {
    const double dt0 = run.series.size() > 1 ? run.series[1].dt : opt.dt.dt_max;
    const QnsResult a = run_with(dt0);
    const QnsResult b = run_with(0.5 * dt0);
    const double ea = a.energy_slack(), eb = b.energy_slack();
    const double ba = a.bd_slack(), bb = b.bd_slack();
    res["refinement"] = {{"dt", dt0}, {"energy_slack", {ea, eb}}, {"bd_slack", {ba, bb}}};
    rep.check("qns.energy_slack_halving", ea > 0.0 ? ea / std::max(eb, 1e-300) : kInf,
              "slack(dt) / slack(dt/2) >= 2", eb <= 0.5 * ea);
    rep.check("qns.bd_slack_halving", ba > 0.0 ? ba / std::max(bb, 1e-300) : kInf, "slack(dt) / slack(dt/2) >= 2",
              bb <= 0.5 * ba);
  }
  rep.results()["trajectory"] = res;
  if (rep.writing())
  {
    run.write_series(rep.path("qns_series.csv"));
    rep.artifact("qns_series.csv");
  }
  std::vector<double> t, ed;
  for (const auto &r : run.series)
  {
    t.push_back(r.t);
    ed.push_back(r.energy + r.dissipation);
  }
  rep.xy("qns_energy.dat", t, ed);
}

RealField band_limited_density(const SpectralGrid &g)
{
  return sample<double>(g, [&](const auto &x) {
    const double k0 = 2.0 * std::numbers::pi / g.length(0);
    double v = 1.0 + 0.3 * std::cos(k0 * x[0]) + 0.1 * std::sin(2.0 * k0 * x[0]);
    if (g.dim() > 1)
    {
      const double k1 = 2.0 * std::numbers::pi / g.length(1);
      v += 0.2 * std::sin(k1 * x[1]) + 0.1 * std::cos(k0 * x[0] + 2.0 * k1 * x[1]);
    }
    return v;
  });
}

void study_bohm(Params pp, Report &rep)
{
  const int n = pp.integer("points", 64);
  const double kappa = pp.num("kappa", 0.5);
  const double tol = pp.num("tol", 1e-7);
  pp.finish();
  pp.require(n >= 8 && n % 2 == 0, "points", "must be even and >= 8");
  json out;
  for (int d : {1, 2})
  {
    const SpectralGrid g = SpectralGrid::cube(d, n, 2.0 * std::numbers::pi);
    const BohmForms f = bohm_forms(band_limited_density(g), kappa);
    double scale = 0.0;
    for (double v : f.A.values())
      scale = std::max(scale, std::abs(v));
    const double ab = max_abs_diff(f.A, f.B) / scale, ac = max_abs_diff(f.A, f.C) / scale,
                 bc = max_abs_diff(f.B, f.C) / scale;
    const double worst = std::max({ab, ac, bc});
    const std::string tag = "d" + std::to_string(d);
    out[tag] = {{"A_vs_B", ab}, {"A_vs_C", ac}, {"B_vs_C", bc}};
    rep.check("bohm." + tag, worst, "<= " + num_str(tol) + " relative", worst <= tol);
  }
  out["params"] = pp.resolved();
  rep.results()["bohm"] = out;
}

void run_qns(Params &top, Report &rep, const ExperimentConfig &cfg)
{
  const auto studies = pick_studies(top, {"trajectory", "bohm"}, {"trajectory"});
  std::map<std::string, json> sub;
  for (const auto &s : studies)
    sub[s] = top.raw(s, json::object());
  top.finish();
  for (const auto &s : studies)
  {
    Params pp(sub[s], s);
    if (s == "trajectory")
      study_trajectory(std::move(pp), rep, cfg);
    else
      study_bohm(std::move(pp), rep);
  }
}

//
// acoustic
//

void study_algebra(Params pp, Report &rep, const ExperimentConfig &cfg)
{
  const SpectralGrid g = grid_from(pp, 2, 64, 2.0 * std::numbers::pi);
  const FluidParams fp = fluid_from(pp, 0.1);
  const auto amps = pp.nums("amplitudes", {1e-2, 5e-3, 2.5e-3, 1.25e-3});
  const auto ts = pp.nums("times", {0.37, 1.0, 12.5});
  pp.finish();
  pp.require(g.dim() >= 2, "dim", "needs d = 2 or 3");
  pp.require(amps.size() >= 2, "amplitudes", "need at least two amplitudes");
  const DispersionParams dp = dispersion_params(fp);
  std::mt19937_64 rng(cfg.seed);
  const double cut = 0.25 * g.axis_cutoff();

  // Unitarity and group law on a complex random field.
  const RealField re = random_smooth(g, 1, rng, cut, false), im = random_smooth(g, 1, rng, cut, false);
  ComplexField f = to_complex(re);
  for (std::size_t i = 0; i < f.size(); i++)
    f(0, i) += cplx(0.0, im(0, i));
  double unit = 0.0, group = 0.0;
  for (double t : ts)
  {
    const ComplexField u = propagate(f, t, dp);
    unit = std::max(unit, std::abs(l2_norm(u) - l2_norm(f)) / l2_norm(f));
    const double s = 0.61 * t;
    group = std::max(group, rel_l2(propagate(propagate(f, s, dp), t, dp), propagate(f, s + t, dp)));
    group = std::max(group, rel_l2(propagate(u, -t, dp), f));
  }
  rep.check("algebra.unitarity", unit, "<= 1e-12", unit <= 1e-12);
  rep.check("algebra.group_law", group, "<= 1e-11", group <= 1e-11);

  // Symmetrize round trip returns (sigma, Qm).
  const RealField sigma = random_smooth(g, 1, rng, cut, true);
  const RealField m = random_smooth(g, g.dim(), rng, cut, true);
  const AcousticState back = desymmetrize(symmetrize({sigma, m, 0.0}, dp), dp);
  const double trip = std::max(rel_l2(back.sigma, sigma), rel_l2(back.m, helmholtz_Q(m)));
  rep.check("algebra.symmetrize_round_trip", trip, "<= 1e-10", trip <= 1e-10);

  // Linearization: full right-hand side against the acoustic system about (1, 0).
  std::vector<double> resid;
  for (double a : amps)
  {
    RealField rho = sigma;
    rho *= fp.eps * a;
    for (auto &v : rho.values())
      v += 1.0;
    RealField ma = m;
    ma *= a;
    const QnsRhs full = qns_rhs(FluidState::from_density_momentum(rho, ma, fp.rho_floor), fp);
    RealField sa = sigma;
    sa *= a;
    const QnsRhs lin = linearized_operator(sa, ma, fp);
    RealField dr = full.drho;
    dr *= 1.0 / fp.eps;
    dr -= lin.drho;
    RealField dm = full.dm;
    dm -= lin.dm;
    resid.push_back(std::hypot(l2_norm(dr), l2_norm(dm)));
  }
  const double order = loglog_fit(amps, resid).slope;
  rep.check("algebra.linearization_order", order, ">= 1.9", order >= 1.9);
  rep.results()["algebra"] = {{"params", pp.resolved()}, {"unitarity", unit}, {"group_law", group},
                              {"round_trip", trip}, {"linearization_residuals", resid},
                              {"linearization_order", order}};
  rep.xy("acoustic_linearization.dat", amps, resid);
}

void study_duhamel(Params pp, Report &rep, const ExperimentConfig &cfg)
{
  const SpectralGrid g = grid_from(pp, 2, 32, 2.0 * std::numbers::pi);
  const double eps = pp.num("eps", 0.25), kappa = pp.num("kappa", 0.5);
  const double t_end = pp.num("t_end", 1.0);
  const auto steps = pp.ints("steps", {10, 20, 40});
  const int ref_steps = pp.integer("reference_steps", 640);
  pp.finish();
  pp.require(g.dim() >= 2, "dim", "needs d = 2 or 3");
  pp.require(steps.size() >= 2, "steps", "need at least two step counts");
  const DispersionParams dp{eps, kappa};
  std::mt19937_64 rng(cfg.seed);
  const double cut = 0.25 * g.axis_cutoff();
  const SymmetrizedState init{random_smooth(g, 1, rng, cut, true), random_smooth(g, 1, rng, cut, true), 0.0};
  const RealField F0 = random_smooth(g, g.dim(), rng, cut, true), F1 = random_smooth(g, g.dim(), rng, cut, true);
  auto source = [&](int n) {
    SourceSeries s;
    for (int i = 0; i <= n; i++)
    {
      const double t = t_end * i / n;
      RealField F = F0;
      F *= std::cos(3.0 * t);
      F.axpy(std::sin(5.0 * t), F1);
      s.times.push_back(t);
      s.F.push_back(std::move(F));
    }
    return s;
  };

  // Without forcing the integrator is the exact propagator.
  SourceSeries zero = source(4);
  for (auto &F : zero.F)
    F *= 0.0;
  const auto free = duhamel_solve(init, zero, dp);
  const auto exact = linear_evolve(init, t_end, dp);
  const double free_err = std::max(rel_l2(free.states.back().sigma_tilde, exact.sigma_tilde),
                                   rel_l2(free.states.back().m_tilde, exact.m_tilde));
  rep.check("duhamel.unforced_exact", free_err, "<= 1e-12", free_err <= 1e-12);

  const auto ref = duhamel_solve(init, source(ref_steps), dp).states.back();
  std::vector<double> hs, errs;
  for (int n : steps)
  {
    const auto s = duhamel_solve(init, source(n), dp).states.back();
    hs.push_back(t_end / n);
    errs.push_back(std::hypot(l2_norm(s.sigma_tilde - ref.sigma_tilde), l2_norm(s.m_tilde - ref.m_tilde)));
  }
  const double order = loglog_fit(hs, errs).slope;
  rep.check("duhamel.order", order, ">= 1.8", order >= 1.8);
  rep.results()["duhamel"] = {{"params", pp.resolved()}, {"unforced_error", free_err}, {"errors", errs},
                              {"order", order}};
  rep.xy("acoustic_duhamel.dat", hs, errs);
}

void study_acoustic_decay(Params pp, Report &rep, const ExperimentConfig &cfg)
{
  const SpectralGrid g = grid_from(pp, 2, 128, 24.0);
  FluidParams fp = fluid_from(pp, 0.1);
  const auto eps = pp.nums("eps_list", {0.4, 0.2, 0.1, 0.05});
  const double amp = pp.num("amplitude", 1.0), width = pp.num("width", 1.0);
  QnsOptions opt;
  opt.t_end = pp.num("t_end", 1.0);
  opt.sample_every = pp.num("sample_every", 0.05);
  opt.dt.dt_max = pp.num("dt_max", 0.005);
  AcousticStudyConfig ac;
  ac.q = pp.num("q", 2.2);
  pp.finish();
  pp.require(g.dim() >= 2, "dim", "needs d = 2 or 3");
  pp.require(eps.size() >= 3, "eps_list", "need at least three eps values");
  if (!cfg.out_dir.empty())
    opt.abort_dir = (std::filesystem::path(cfg.out_dir) / "abort").string();
  std::vector<AcousticRun> runs;
  for (double e : eps)
  {
    fp.eps = e;
    const InitialData data = make_data(DataKind::IllPrepared, amp, e, fp.gamma, g, fp.kappa, width);
    const QnsResult r = qns_solve(data.state, fp, opt);
    runs.push_back({e, r.frame_times, r.frame_rho, r.frame_m});
  }
  const AcousticStudy st = acoustic_decay_study(runs, fp.gamma, ac);
  json series = json::object();
  for (const auto &s : st.table.series())
    series[s.id] = {{"values", s.values}, {"rate", s.fit.rate}, {"decreasing", s.decreasing}};
  rep.results()["decay"] = {{"params", pp.resolved()}, {"series", series}, {"failures", st.failures}};
  for (const auto &s : st.table.series())
    rep.check("decay." + s.id + ".decreasing", s.fit.rate, "strictly decreasing in eps", s.decreasing);
  rep.check("decay.Qm.rate", st.table.at("Qm").fit.rate, "> 0", st.table.at("Qm").fit.rate > 0.0);
  if (rep.writing())
  {
    st.table.write_csv(rep.path("acoustic_decay.csv"));
    rep.artifact("acoustic_decay.csv");
  }
  rep.xy("acoustic_decay_Qm.dat", st.table.eps_values(), st.table.at("Qm").values);
}

void run_acoustic(Params &top, Report &rep, const ExperimentConfig &cfg)
{
  const auto studies = pick_studies(top, {"algebra", "duhamel", "decay"}, {"algebra", "duhamel", "decay"});
  std::map<std::string, json> sub;
  for (const auto &s : studies)
    sub[s] = top.raw(s, json::object());
  top.finish();
  for (const auto &s : studies)
  {
    Params pp(sub[s], s);
    if (s == "algebra")
      study_algebra(std::move(pp), rep, cfg);
    else if (s == "duhamel")
      study_duhamel(std::move(pp), rep, cfg);
    else
      study_acoustic_decay(std::move(pp), rep, cfg);
  }
}

//
// limit
//

StudyConfig study_config_from(Params &pp)
{
  StudyConfig c;
  c.dim = pp.integer("dim", c.dim);
  c.points = pp.integer("points", c.points);
  c.length = pp.num("length", c.length);
  c.width = pp.num("width", c.width);
  c.amplitude = pp.num("amplitude", c.amplitude);
  c.gamma = pp.num("gamma", c.gamma);
  c.nu = pp.num("nu", c.nu);
  c.kappa = pp.num("kappa", c.kappa);
  c.eps = pp.nums("eps", c.eps);
  c.t_end = pp.num("t_end", c.t_end);
  c.sample_every = pp.num("sample_every", c.sample_every);
  c.q = pp.num("q", c.q);
  c.dt.dt_max = pp.num("dt_max", c.dt.dt_max);
  return c;
}

void validate_study(const StudyConfig &c, const Params &pp)
{
  try
  {
    c.validate();
  }
  catch (const InvalidInput &e)
  {
    throw ConfigError(pp.name("eps"), e.what());
  }
}

// Reference solver against the exact Taylor-Green decay.
double taylor_green_error(double nu, double t_end, double sample_every)
{
  const SpectralGrid g = SpectralGrid::cube(2, 64, 2.0 * std::numbers::pi);
  NSOptions o;
  o.t_end = t_end;
  o.sample_every = sample_every;
  const NSResult r = ns_solve({taylor_green(g, nu, 0.0), 0.0, nu}, o);
  double err = 0.0;
  for (std::size_t n = 0; n < r.times.size(); n++)
    err = std::max(err, max_abs_diff(r.frames[n], taylor_green(g, nu, r.times[n])));
  return err;
}

json runs_json(const ConvergenceStudy &st)
{
  json runs = json::array();
  for (const auto &r : st.runs)
    runs.push_back({{"eps", r.eps},
                    {"steps", r.steps},
                    {"energy0", r.energy0},
                    {"energy_slack", r.energy_slack},
                    {"bd_slack", r.bd_slack},
                    {"mass_drift", r.mass_drift},
                    {"lower_bound_ok", r.lower_bound_ok},
                    {"norms", r.norms},
                    {"data", {{"energy", r.data.energy},
                              {"rho_minus_1_l2", r.data.rho_minus_1_l2},
                              {"grad_sqrt_rho_l2", r.data.grad_sqrt_rho_l2},
                              {"momentum_l2", r.data.momentum_l2},
                              {"internal_l1", r.data.internal_l1},
                              {"limit_energy", r.data.limit_energy},
                              {"beta", r.data.beta}}}});
  return runs;
}

json table_json(const RateTable &t)
{
  json out = json::object();
  for (const auto &s : t.series())
    out[s.id] = {{"p", Report::finite_or_null(s.p)}, {"q", s.q},          {"s", s.s},
                 {"values", s.values},                {"rate", s.fit.rate}, {"residual", s.fit.residual},
                 {"decreasing", s.decreasing}};
  return out;
}

// Runs one sweep; false when it aborted (the report then carries the abort).
bool sweep(const StudyConfig &c, Report &rep, const ExperimentConfig &cfg, const std::string &tag,
           ConvergenceStudy &st)
{
  std::string abort_dir;
  if (!cfg.out_dir.empty())
    abort_dir = (std::filesystem::path(cfg.out_dir) / ("abort_" + tag)).string();
  RunHook hook;
  if (rep.writing())
    hook = [&](double eps, const QnsResult &r) {
      const std::string file = "limit_" + tag + "_series_eps" + format_double(eps) + ".csv";
      r.write_series(rep.path(file));
      rep.artifact(file);
    };
  st = convergence_study(c, hook, abort_dir);
  json out = {{"kind", to_string(c.kind)},
              {"runs", runs_json(st)},
              {"table", table_json(st.table)},
              {"leray_reference", {{"max_residual", st.leray_reference.max_residual},
                                   {"energy0", st.leray_reference.energy0}}},
              {"failures", st.failures}};
  if (!st.leray_extraction.times.empty())
    out["leray_extraction"] = {{"max_residual", st.leray_extraction.max_residual},
                               {"energy0", st.leray_extraction.energy0}};
  rep.results()[tag] = out;
  if (st.aborted)
  {
    rep.abort(st.abort_message, 0.0, st.abort_snapshot);
    return false;
  }
  if (rep.writing())
  {
    const std::string file = "limit_" + tag + "_rates.csv";
    st.table.write_csv(rep.path(file));
    rep.artifact(file);
  }
  rep.xy("limit_" + tag + "_lambda.dat", st.table.eps_values(), st.table.at("sqrt_rho_u_minus_u").values);
  return true;
}

void check_study(const ConvergenceStudy &st, Report &rep, const std::string &tag, double slack_tol)
{
  const double beta = beta_exponent(st.config.gamma);
  const auto &a = st.table.at("rho_minus_1");
  if (st.config.kind == DataKind::IllPrepared)
    rep.check(tag + ".rho_minus_1.rate", a.fit.rate, "within 20% of beta = " + format_double(beta),
              std::abs(a.fit.rate - beta) <= 0.2 * beta);
  else
    rep.check(tag + ".rho_minus_1.rate", a.fit.rate, ">= 0.8 beta", a.fit.rate >= 0.8 * beta);
  const auto &q = st.table.at("Qm");
  rep.check(tag + ".Qm.decreasing", q.values.back(), "strictly decreasing in eps", q.decreasing);
  rep.check(tag + ".Qm.rate", q.fit.rate, "> 0", q.fit.rate > 0.0);
  for (const char *id : {"rho_minus_1", "sqrt_rho_u_minus_u", "Pm_minus_u"})
  {
    const auto &s = st.table.at(id);
    rep.check(tag + "." + id + ".decreasing", s.values.back(), "strictly decreasing in eps", s.decreasing);
  }
  double worst = 0.0;
  bool lower = true;
  for (const auto &r : st.runs)
  {
    worst = std::max(worst, std::max(r.energy_slack, r.bd_slack) / r.energy0);
    lower = lower && r.lower_bound_ok;
  }
  rep.check(tag + ".bookkeeping", worst, "energy and BD slack <= slack_tol E(0) per run",
            worst <= slack_tol && lower);
  const auto &lr = st.leray_reference;
  rep.check(tag + ".leray_reference", lr.max_residual / lr.energy0, "<= 1e-6 relative", lr.ok);
}

void study_convergence(Params pp, Report &rep, const ExperimentConfig &cfg)
{
  StudyConfig c = study_config_from(pp);
  const std::string kind = pp.str("kind", "ill_prepared");
  const bool tg = pp.flag("taylor_green_check", true);
  const double slack_tol = pp.num("slack_tol", 1e-3);
  pp.finish();
  try
  {
    c.kind = parse_data_kind(kind);
  }
  catch (const InvalidInput &e)
  {
    throw ConfigError(pp.name("kind"), e.what());
  }
  validate_study(c, pp);
  if (tg)
  {
    const double err = taylor_green_error(c.nu, c.t_end, c.sample_every);
    rep.results()["taylor_green_error"] = err;
    rep.check("convergence.taylor_green", err, "<= 1e-8", err <= 1e-8);
  }
  ConvergenceStudy st;
  if (!sweep(c, rep, cfg, "convergence", st))
    return;
  rep.results()["convergence"]["params"] = pp.resolved();
  check_study(st, rep, "convergence", slack_tol);
}

void study_contrast(Params pp, Report &rep, const ExperimentConfig &cfg)
{
  StudyConfig c = study_config_from(pp);
  const double slack_tol = pp.num("slack_tol", 1e-3);
  pp.finish();
  validate_study(c, pp);
  ConvergenceStudy ill, well;
  c.kind = DataKind::IllPrepared;
  if (!sweep(c, rep, cfg, "contrast_ill", ill))
    return;
  c.kind = DataKind::WellPrepared;
  if (!sweep(c, rep, cfg, "contrast_well", well))
    return;
  const auto &vi = ill.table.at("sqrt_rho_u_minus_u").values;
  const auto &vw = well.table.at("sqrt_rho_u_minus_u").values;
  double worst = 0.0;
  for (std::size_t i = 0; i < vi.size(); i++)
    worst = std::max(worst, vw[i] / vi[i]);
  rep.check("contrast.well_over_ill", worst, "<= 1 at every eps", worst <= 1.0);
  const auto &lr = well.leray_reference;
  rep.check("contrast.well_leray", lr.max_residual / lr.energy0, "<= 1e-6 relative", lr.ok);
  double slack = 0.0;
  for (const auto *st : {&ill, &well})
    for (const auto &r : st->runs)
      slack = std::max(slack, std::max(r.energy_slack, r.bd_slack) / r.energy0);
  rep.check("contrast.bookkeeping", slack, "<= slack_tol E(0) per run", slack <= slack_tol);
  rep.results()["contrast"] = {{"params", pp.resolved()}, {"well_over_ill", worst}};
}

void study_exponents(Params pp, Report &rep)
{
  const auto gammas = pp.nums("gammas", {1.25, 1.5, 1.75, 2.0, 2.5});
  const auto ps = pp.nums("p", {2.0, 3.0, 4.0, 6.0});
  pp.finish();
  json table = json::array();
  for (double g : gammas)
  {
    json row = {{"gamma", g}, {"beta", beta_exponent(g)}};
    for (double p : ps)
      row["alpha_p" + format_double(p)] = alpha_exponent(p, g);
    table.push_back(row);
  }
  struct Pin
  {
    Rational gamma, want_beta, want_alpha;
  };
  const Pin pins[] = {{Rational(2), Rational(1), Rational(1)}, {Rational(3, 2), Rational(4, 9), Rational(8, 9)}};
  bool exact = true;
  json pinned = json::array();
  for (const auto &pin : pins)
  {
    const Rational b = beta_exponent(pin.gamma), a = alpha_exponent(Rational(2), pin.gamma);
    exact = exact && b == pin.want_beta && a == pin.want_alpha;
    pinned.push_back({{"gamma", pin.gamma.str()}, {"beta", b.str()}, {"alpha_2", a.str()}});
    rep.check("exponents.gamma_" + pin.gamma.str(), b.value(),
              "beta = " + pin.want_beta.str() + ", alpha(2) = " + pin.want_alpha.str(),
              b == pin.want_beta && a == pin.want_alpha);
  }
  rep.results()["exponents"] = {{"params", pp.resolved()}, {"table", table}, {"pinned", pinned}};
  if (rep.writing())
  {
    CsvWriter w(rep.path("limit_exponents.csv"), {"gamma", "beta", "p", "alpha"});
    for (double g : gammas)
      for (double p : ps)
        w.row({g, beta_exponent(g), p, alpha_exponent(p, g)});
    rep.artifact("limit_exponents.csv");
  }
  std::vector<double> b;
  for (double g : gammas)
    b.push_back(beta_exponent(g));
  rep.xy("limit_beta.dat", gammas, b);
}

void run_limit(Params &top, Report &rep, const ExperimentConfig &cfg)
{
  const auto studies = pick_studies(top, {"convergence", "contrast", "exponents"}, {"convergence"});
  std::map<std::string, json> sub;
  for (const auto &s : studies)
    sub[s] = top.raw(s, json::object());
  top.finish();
  for (const auto &s : studies)
  {
    Params pp(sub[s], s);
    if (s == "convergence")
      study_convergence(std::move(pp), rep, cfg);
    else if (s == "contrast")
      study_contrast(std::move(pp), rep, cfg);
    else
      study_exponents(std::move(pp), rep);
  }
}

}  // namespace

const std::vector<std::string> &experiment_commands()
{
  static const std::vector<std::string> names = {"dispersion", "strichartz", "qns", "acoustic", "limit"};
  return names;
}

ExperimentResult run_experiment(const ExperimentConfig &cfg)
{
  if (cfg.threads < 1)
    throw ConfigError("threads", "must be at least 1");
  const auto &names = experiment_commands();
  if (std::find(names.begin(), names.end(), cfg.command) == names.end())
    throw ConfigError("command", "unknown subcommand '" + cfg.command + "'");
  Params top(cfg.params, "");
  Report rep(cfg);
  try
  {
    if (cfg.command == "dispersion")
      run_dispersion(top, rep, cfg);
    else if (cfg.command == "strichartz")
      run_strichartz(top, rep, cfg);
    else if (cfg.command == "qns")
      run_qns(top, rep, cfg);
    else if (cfg.command == "acoustic")
      run_acoustic(top, rep, cfg);
    else
      run_limit(top, rep, cfg);
  }
  catch (const NumericalAbort &e)
  {
    rep.abort(e.what(), e.time(), e.snapshot());
  }
  catch (const UnderResolved &e)
  {
    throw ConfigError("length", e.what());
  }
  return rep.finish(top.resolved());
}

}  // namespace lowmach
