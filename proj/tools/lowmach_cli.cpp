// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

// lowmach <subcommand> [--config file.json] [--out dir] [--seed n] [--threads n]
//
// Exit status: 0 success, 2 configuration error, 3 an asserted invariant failed,
// 4 numerical abort (the summary names the snapshot).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lowmach/cli/experiments.hpp"

namespace
{

nlohmann::json load_config(const std::string &path)
{
  if (path.empty())
    return nlohmann::json::object();
  std::ifstream in(path);
  if (!in)
    throw lowmach::ConfigError("--config", "cannot open " + path);
  try
  {
    return nlohmann::json::parse(in);
  }
  catch (const nlohmann::json::parse_error &e)
  {
    throw lowmach::ConfigError("--config", e.what());
  }
}

void print_checks(const nlohmann::json &summary)
{
  for (const auto &c : summary.at("checks"))
    std::cout << (c.at("pass").get<bool>() ? "  ok    " : "  FAIL  ") << c.at("id").get<std::string>() << " = "
              << c.at("value").dump() << "  (" << c.at("bound").get<std::string>() << ")\n";
  if (summary.at("results").contains("abort"))
    std::cout << "  ABORT " << summary["results"]["abort"].dump() << "\n";
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"lowmach: low Mach number studies for the quantum Navier-Stokes system"};
  app.require_subcommand(1, 1);
  std::string config, out;
  std::uint64_t seed = 0;
  int threads = 1;
  bool quiet = false;
  app.add_option("--config", config, "JSON parameter document");
  app.add_option("--out", out, "output directory for CSV, plot data and summary.json");
  app.add_option("--seed", seed, "seed for randomized data");
  app.add_option("--threads", threads, "thread budget")->check(CLI::PositiveNumber);
  app.add_flag("--quiet", quiet, "print only the summary path");
  app.fallthrough();
  for (const auto &name : lowmach::experiment_commands())
    app.add_subcommand(name, "run the " + name + " studies");

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError &e)
  {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : lowmach::kExitConfig;
  }

  lowmach::ExperimentConfig cfg;
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.out_dir = out;
  cfg.seed = seed;
  cfg.threads = threads;
  try
  {
    cfg.params = load_config(config);
    const lowmach::ExperimentResult r = lowmach::run_experiment(cfg);
    if (!quiet)
      print_checks(r.summary);
    if (!out.empty())
      std::cout << out << "/summary.json\n";
    else if (!quiet)
      std::cout << r.summary.at("results").dump(2) << "\n";
    return r.exit_code;
  }
  catch (const lowmach::ConfigError &e)
  {
    std::cerr << "lowmach: configuration error at " << e.what() << "\n";
    return lowmach::kExitConfig;
  }
  catch (const lowmach::InvalidInput &e)
  {
    std::cerr << "lowmach: invalid input: " << e.what() << "\n";
    return lowmach::kExitConfig;
  }
}
