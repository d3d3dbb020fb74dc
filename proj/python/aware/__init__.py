"""Knowledge and awareness on finite state-space models."""

from fractions import Fraction

from ._aware import (
    AwareError,
    Model,
    ParseError,
    automorphisms,
    check_proof,
    coherent,
    dlr_report,
    evaluate,
    extend_dlr,
    parse,
    refute,
    schema_check,
    schema_names,
    search,
    trade,
    valid,
    verify_paper,
    witness,
)
from ._aware import _eu


def eu(scenario, agent, state, act):
    """Expected utility of `act` for `agent` on its information set at `state`."""
    return Fraction(_eu(scenario, agent, state, act))


__all__ = [
    "AwareError",
    "Model",
    "ParseError",
    "automorphisms",
    "check_proof",
    "coherent",
    "dlr_report",
    "eu",
    "evaluate",
    "extend_dlr",
    "parse",
    "refute",
    "schema_check",
    "schema_names",
    "search",
    "trade",
    "valid",
    "verify_paper",
    "witness",
]
