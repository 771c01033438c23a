"""Effective upper bounds for Faltings's delta function."""

import json

from ._core import (
    ConvergenceError,
    DomainError,
    UsageError,
    c22_margin,
    constant_ledger,
    huber_log_bound,
    k0,
    k1,
    k1_upper,
    run_suite,
    s_x_closed,
    s_x_quadrature_bound,
    single_surface_log_bound,
    suite_names,
)
from ._core import evaluate_json as _evaluate_json


def evaluate(scenario, mode=None, rounded=False):
    """Evaluate a scenario given as a dict or JSON text; returns the report dict."""
    text = scenario if isinstance(scenario, str) else json.dumps(scenario)
    return json.loads(_evaluate_json(text, mode, rounded))


__all__ = [
    "ConvergenceError",
    "DomainError",
    "UsageError",
    "c22_margin",
    "constant_ledger",
    "evaluate",
    "huber_log_bound",
    "k0",
    "k1",
    "k1_upper",
    "run_suite",
    "s_x_closed",
    "s_x_quadrature_bound",
    "single_surface_log_bound",
    "suite_names",
]
