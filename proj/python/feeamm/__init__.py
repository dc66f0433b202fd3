"""Fee-adjusted constant-product AMM model.

Scalar functions take plain floats and ints. State-level helpers take the
same dicts as the command-line tool's JSON documents.
"""

import json

from ._core import (
    AmmError,
    additivity_factor,
    differential_compare,
    equilibrium_value,
    get_amount_out,
    internal_rate,
    k_invariant_check,
    optimal_swap_value,
    round_trip_output,
    swap_output,
    swap_rate,
)
from . import _core

__all__ = [
    "AmmError",
    "additivity_factor",
    "differential_compare",
    "equilibrium_value",
    "execute_swap",
    "gain",
    "get_amount_out",
    "internal_rate",
    "k_invariant_check",
    "optimal_swap_value",
    "round_trip_output",
    "solve_arbitrage",
    "swap_output",
    "swap_rate",
    "wealth",
]


def execute_swap(state, tx):
    """Apply tx to state; returns (new_state, amount_out)."""
    new_state, amount_out = _core._execute_swap(json.dumps(state), json.dumps(tx))
    return json.loads(new_state), amount_out


def gain(state, oracle, tx):
    return _core._gain(json.dumps(state), json.dumps(oracle), json.dumps(tx))


def wealth(state, oracle, account):
    return _core._wealth(json.dumps(state), json.dumps(oracle), account)


def solve_arbitrage(state, oracle, token0, token1, sender):
    return _core._solve_arbitrage(json.dumps(state), json.dumps(oracle), token0, token1, sender)
