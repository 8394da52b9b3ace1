// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

// One line per acceptance criterion: [PASS] or [FAIL], the measured values and the wall time.
// Pass criterion ids (C1 ... C10) as arguments to run a subset.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "lowmach/cli/experiments.hpp"

using lowmach::ExperimentConfig;
using nlohmann::json;

namespace
{

struct Criterion
{
  std::string id;
  std::string title;
  std::string command;
  json params;
  double budget_s;
};

std::vector<Criterion> criteria()
{
  return {
    {"C1", "dispersive decay exponent, d = 3, slope -3/2 within 10%", "dispersion",
     {{"study", "decay"},
      {"decay", {{"d", 3}, {"eps", 1.0}, {"kappa", 1.0}, {"R", 1.0}, {"t_min", 5.0}, {"t_max", 50.0},
                 {"backend", "grid"}, {"points", 256}, {"length", 402.0}, {"slope_tol", 0.1}}}},
     300.0},
    {"C2", "eps gain on a low shell, delta in [0.375, 0.625]", "dispersion",
     {{"study", "eps_gain"},
      {"eps_gain", {{"R", 0.1}, {"kappa", 1.0}, {"eps", {1.0, 0.5, 0.25, 0.125}}, {"delta_min", 0.375},
                    {"delta_max", 0.625}}}},
     600.0},
    {"C3", "scaling identity, 20 tuples, d in {2, 3}, 1e-8 absolute", "dispersion",
     {{"study", "scaling_identity"}, {"scaling_identity", {{"tuples", 20}, {"dims", {2, 3}}, {"tol", 1e-8}}}},
     120.0},
    {"C4", "h envelope (d = 2) and bounded, refinement-stable ratio (d = 3)", "dispersion",
     {{"study", "h_bound"}, {"h_bound", {{"kappa", 1.0}, {"lambda_min", 1e-4}, {"lambda_max", 1e4}}}},
     60.0},
    {"C5", "propagator algebra and linearization order", "acoustic", {{"study", "algebra"}}, 120.0},
    {"C6", "QNS bookkeeping, 2D, gamma = 2, eps = 0.1, 256^2, T = 1", "qns",
     {{"study", "trajectory"},
      {"trajectory", {{"dim", 2}, {"points", 256}, {"gamma", 2.0}, {"eps", 0.1}, {"t_end", 1.0}, {"refine", true},
                      {"slack_tol", 1e-3}}}},
     600.0},
    {"C7", "Bohm forms agree to 1e-7 relative in 1D and 2D", "qns",
     {{"study", "bohm"}, {"bohm", {{"tol", 1e-7}}}},
     60.0},
    {"C8", "low Mach convergence, ill-prepared, eps in {0.4, 0.2, 0.1, 0.05}", "limit",
     {{"study", "convergence"},
      {"convergence", {{"gamma", 2.0}, {"kind", "ill_prepared"}, {"eps", {0.4, 0.2, 0.1, 0.05}}, {"q", 2.2},
                       {"taylor_green_check", true}}}},
     1800.0},
    {"C9", "well- vs ill-prepared contrast and Leray residual", "limit",
     {{"study", "contrast"}, {"contrast", {{"gamma", 2.0}, {"eps", {0.4, 0.2, 0.1, 0.05}}}}},
     1800.0},
    {"C10", "exponent calculators in rational arithmetic", "limit", {{"study", "exponents"}}, 1.0},
  };
}

std::string short_value(const json &v)
{
  if (v.is_number_float())
  {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v.get<double>());
    return buf;
  }
  return v.dump();
}

}  // namespace

int main(int argc, char **argv)
{
  std::set<std::string> pick(argv + 1, argv + argc);
  int failed = 0, ran = 0;
  for (const auto &c : criteria())
  {
    if (!pick.empty() && !pick.count(c.id))
      continue;
    ran++;
    ExperimentConfig cfg;
    cfg.command = c.command;
    cfg.params = c.params;
    cfg.seed = 0;
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try
    {
      const auto r = lowmach::run_experiment(cfg);
      pass = r.exit_code == lowmach::kExitOk;
      for (const auto &ch : r.summary.at("checks"))
      {
        detail += " " + ch.at("id").get<std::string>() + "=" + short_value(ch.at("value"));
        if (!ch.at("pass").get<bool>())
          detail += "(!)";
      }
      if (r.summary.at("results").contains("abort"))
        detail += " abort: " + r.summary["results"]["abort"]["message"].get<std::string>();
    }
    catch (const std::exception &e)
    {
      detail = std::string(" error: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.budget_s;
    if (!in_time)
      detail += " (over the " + short_value(c.budget_s) + " s budget)";
    pass = pass && in_time;
    failed += !pass;
    char t[32];
    std::snprintf(t, sizeof t, "%.1fs", secs);
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << c.id << " " << c.title << " |" << detail << " | " << t
              << std::endl;
  }
  std::cout << (ran - failed) << "/" << ran << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
