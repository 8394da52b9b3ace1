// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef LOWMACH_CLI_EXPERIMENTS_HPP
#define LOWMACH_CLI_EXPERIMENTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lowmach/error.hpp"

namespace lowmach
{

// Bad experiment configuration. key() names the offending entry ("decay.points").
class ConfigError : public InvalidInput
{
public:
  ConfigError(const std::string &key, const std::string &what)
    : InvalidInput(key + ": " + what), key_(key)
  {
  }
  const std::string &key() const { return key_; }

private:
  std::string key_;
};

struct ExperimentConfig
{
  std::string command;  // dispersion, strichartz, qns, acoustic, limit
  nlohmann::json params = nlohmann::json::object();
  std::string out_dir;  // empty: no files written
  std::uint64_t seed = 0;
  int threads = 1;
};

enum ExitCode
{
  kExitOk = 0,
  kExitConfig = 2,
  kExitInvariant = 3,
  kExitAbort = 4
};

struct ExperimentResult
{
  nlohmann::json summary;
  int exit_code = kExitOk;
};

//
// Params select sub-studies with "study" (a name or a list) and carry one object per selected
// study, e.g. {"study": "decay", "decay": {"points": 256}}. Unknown keys are rejected.
// The summary records the resolved parameters and a "checks" list of
// {id, value, bound, pass}; the exit code is kExitInvariant iff some check fails and
// kExitAbort when a time integration stopped (the snapshot path is reported).
//
ExperimentResult run_experiment(const ExperimentConfig &cfg);

const std::vector<std::string> &experiment_commands();

}  // namespace lowmach

#endif  // LOWMACH_CLI_EXPERIMENTS_HPP
