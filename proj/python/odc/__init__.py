"""Exact telescopers, order-degree curves and cost-optimal orders."""

from ._core import (
    ParseError,
    cost,
    curve,
    decompose,
    dmin,
    params,
    rat_curve,
    rat_telescope,
    rat_verify,
    region,
    run_cli,
    suggest_order,
    telescope,
    verify,
)

__all__ = [
    "ParseError",
    "cost",
    "curve",
    "decompose",
    "dmin",
    "params",
    "rat_curve",
    "rat_telescope",
    "rat_verify",
    "region",
    "run_cli",
    "suggest_order",
    "telescope",
    "verify",
]
