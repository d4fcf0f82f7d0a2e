"""Python bindings for the bqsim recognizer simulators."""

import json

from ._bqsim import (
    CapExceeded,
    ConfigError,
    OutOfPrefixError,
    SimulatorFault,
    __version__,
    adh_correct,
    enumerate_members,
    is_member,
    languages,
    least_non_divisor,
    coin_error,
    log_transform,
    wilson_interval,
)
from ._bqsim import run_experiment as _run_experiment


def run(config, fmt="json"):
    """Run an experiment described by a dict. Returns (report, exit_code).

    The report is a dict for fmt="json" and CSV text otherwise.
    """
    text, code = _run_experiment(json.dumps(config), fmt)
    return (json.loads(text) if fmt == "json" else text), code


__all__ = [
    "CapExceeded",
    "ConfigError",
    "OutOfPrefixError",
    "SimulatorFault",
    "__version__",
    "adh_correct",
    "enumerate_members",
    "is_member",
    "languages",
    "least_non_divisor",
    "coin_error",
    "log_transform",
    "run",
    "wilson_interval",
]
