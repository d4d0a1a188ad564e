"""Exact partition functions of Baxter lattices with a reflecting boundary.

Specs, configurations and states use the JSON schema of the command-line
tool, as plain dicts. Rationals come back as fractions.Fraction.
"""

import json
from fractions import Fraction

from . import _bpba
from ._bpba import DegenerateError, DimensionError, Error, InvalidSpec, ParseError, PoleError

__all__ = [
    "DegenerateError",
    "DimensionError",
    "Error",
    "InvalidSpec",
    "ParseError",
    "PoleError",
    "all_configs",
    "bethe_roots",
    "figure1",
    "init8",
    "invariant_state",
    "is_invariant",
    "partition_function",
    "partition_functions",
    "plan_moves",
    "q_function",
    "validate",
    "verify",
]

METHODS = ("direct", "aba", "cba")


def _text(x):
    if isinstance(x, (Fraction, int)):
        return str(x)
    return x


def figure1():
    return json.loads(_bpba.figure1())


def init8():
    return json.loads(_bpba.init8())


def validate(spec):
    """(ok, violations)."""
    ok, violations = _bpba.validate(json.dumps(spec))
    return ok, list(violations)


def all_configs(n):
    return json.loads(_bpba.all_configs(n))


def partition_functions(spec, configs=None, method="direct"):
    if configs is None:
        configs = all_configs(spec["n"])
    values = _bpba.partition_functions(json.dumps(spec), json.dumps(configs), method)
    return [Fraction(v) for v in values]


def partition_function(spec, alpha, beta, method="all"):
    """Z(alpha, beta). With method="all", a dict keyed by method."""
    config = [{"alpha": list(alpha), "beta": list(beta)}]
    if method == "all":
        return {m: partition_functions(spec, config, m)[0] for m in METHODS}
    return partition_functions(spec, config, method)[0]


def bethe_roots(spec):
    return [Fraction(z) for z in _bpba.bethe_roots(json.dumps(spec))]


def q_function(spec, z):
    return Fraction(_bpba.q_function(json.dumps(spec), _text(z)))


def invariant_state(spec, route="direct"):
    """Nonzero components in the QuantumState schema, values as Fraction."""
    state = json.loads(_bpba.invariant_state(json.dumps(spec), route))
    for c in state["components"]:
        c["value"] = Fraction(c["value"])
    return state


def is_invariant(spec, state, z):
    comps = [dict(c, value=_text(c["value"])) for c in state["components"]]
    wire = dict(state, components=comps)
    return _bpba.is_invariant(json.dumps(spec), json.dumps(wire), _text(z))


def plan_moves(spec):
    plan = json.loads(_bpba.plan_moves(json.dumps(spec)))
    for move in plan["moves"]:
        move["arg"] = Fraction(move["arg"])
    return plan


def verify(suite="all", draws=20, seed=1):
    return _bpba.verify(suite, draws, seed)
