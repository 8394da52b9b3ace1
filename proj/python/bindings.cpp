// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lowmach/cli/experiments.hpp"
#include "lowmach/dispersion/bogoliubov.hpp"
#include "lowmach/dispersion/strichartz.hpp"
#include "lowmach/limit/exponents.hpp"
#include "lowmach/limit/rates.hpp"

namespace py = pybind11;
using namespace lowmach;

PYBIND11_MODULE(_lowmach, m)
{
  m.doc() = "lowmach core bindings";

  // Translators run newest first, so the subclass goes last.
  auto invalid = py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", invalid.ptr());
  py::register_exception<NumericalAbort>(m, "NumericalAbort", PyExc_RuntimeError);

  m.def(
    "omega", [](double r, double eps, double kappa) { return omega(r, {eps, kappa}); }, py::arg("xi_norm"),
    py::arg("eps") = 1.0, py::arg("kappa") = 1.0, "Bogoliubov frequency at |xi|.");
  m.def(
    "hessian_det", [](double r, double eps, double kappa, int d) { return hessian_det(r, {eps, kappa}, d); },
    py::arg("r"), py::arg("eps") = 1.0, py::arg("kappa") = 1.0, py::arg("d") = 3);

  m.def("beta_exponent", py::overload_cast<double>(&beta_exponent), py::arg("gamma"));
  m.def("alpha_exponent", py::overload_cast<double, double>(&alpha_exponent), py::arg("p"), py::arg("gamma"));
  m.def(
    "beta_fraction",
    [](std::int64_t num, std::int64_t den) { return beta_exponent(Rational(num, den)).str(); },
    py::arg("gamma_num"), py::arg("gamma_den") = 1, "beta as an exact fraction string.");
  m.def(
    "alpha_fraction",
    [](std::int64_t p, std::int64_t gnum, std::int64_t gden) {
      return alpha_exponent(Rational(p), Rational(gnum, gden)).str();
    },
    py::arg("p"), py::arg("gamma_num"), py::arg("gamma_den") = 1);

  m.def(
    "rate_fit",
    [](const std::vector<double> &eps, const std::vector<double> &values) {
      const RateFit f = rate_fit(eps, values);
      return py::make_tuple(f.rate, f.residual);
    },
    py::arg("eps"), py::arg("values"), "Least-squares log-log slope and max log residual.");

  m.def("is_admissible", py::overload_cast<double, double, int>(&is_admissible), py::arg("p"), py::arg("q"),
        py::arg("d"));

  m.def("experiment_commands", &experiment_commands);
  m.def(
    "run_experiment",
    [](const std::string &command, const std::string &params, const std::string &out_dir, std::uint64_t seed) {
      ExperimentConfig cfg;
      cfg.command = command;
      cfg.params = params.empty() ? nlohmann::json::object() : nlohmann::json::parse(params);
      cfg.out_dir = out_dir;
      cfg.seed = seed;
      ExperimentResult r;
      {
        py::gil_scoped_release release;
        r = run_experiment(cfg);
      }
      return py::make_tuple(r.exit_code, r.summary.dump());
    },
    py::arg("command"), py::arg("params") = "{}", py::arg("out_dir") = "", py::arg("seed") = 0,
    "Run a subcommand; returns (exit_code, summary JSON text).");
}
