# Copyright 2026 The lowmach Authors. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

"""Python access to the lowmach core."""

import json as _json

from ._lowmach import (
    ConfigError,
    InvalidInput,
    NumericalAbort,
    alpha_exponent,
    alpha_fraction,
    beta_exponent,
    beta_fraction,
    experiment_commands,
    hessian_det,
    is_admissible,
    omega,
    rate_fit,
)
from ._lowmach import run_experiment as _run_experiment


def run(command, params=None, out_dir="", seed=0):
    """Run a subcommand with a parameter dict; returns (exit_code, summary dict)."""
    code, summary = _run_experiment(command, _json.dumps(params or {}), out_dir, seed)
    return code, _json.loads(summary)


__all__ = [
    "ConfigError",
    "InvalidInput",
    "NumericalAbort",
    "alpha_exponent",
    "alpha_fraction",
    "beta_exponent",
    "beta_fraction",
    "experiment_commands",
    "hessian_det",
    "is_admissible",
    "omega",
    "rate_fit",
    "run",
]
