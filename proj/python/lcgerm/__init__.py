"""Exact log canonical thresholds and local inequalities for plane curve germs.

Rationals are exchanged as fractions.Fraction; polynomials as text in x, y.
"""

import json
from fractions import Fraction

from . import _core
from ._core import DepthCapExceeded, HypothesisNotMet, InvariantError, ParseError

__all__ = [
    "DepthCapExceeded",
    "HypothesisNotMet",
    "InvariantError",
    "ParseError",
    "audit",
    "config_report",
    "family_threshold",
    "fuzz",
    "intersection_multiplicity",
    "is_feasible",
    "is_log_canonical",
    "lct",
    "pair_mult",
    "scenario",
    "scenario_names",
    "verify",
]


def _divisor(components):
    return [(poly, str(Fraction(c))) for poly, c in components]


def _rational(text):
    return None if text == "inf" else Fraction(text)


def lct(components, depth_cap=0):
    """lct at the origin of sum c*C over (polynomial, coefficient) pairs; None for +infinity."""
    return _rational(_core.lct(_divisor(components), depth_cap))


def is_log_canonical(components, depth_cap=0):
    return _core.is_log_canonical(_divisor(components), depth_cap)


def family_threshold(components, curve, depth_cap=0):
    """sup of lambda with components + lambda*curve log canonical at the origin."""
    return Fraction(_core.family_threshold(_divisor(components), curve, depth_cap))


def intersection_multiplicity(f, g):
    return _core.intersection_multiplicity(f, g)


def pair_mult(components, delta):
    return Fraction(_core.pair_mult(_divisor(components), delta))


def is_feasible(variables, constraints):
    """(feasible, witness point or Farkas multipliers) for constraint strings."""
    feasible, evidence = _core.is_feasible(list(variables), list(constraints))
    return feasible, [Fraction(q) for q in evidence]


def scenario_names():
    return list(_core.scenario_names())


def _report(result):
    ok, text = result
    return ok, json.loads(text)


def config_report(command, config, theorem="all"):
    """Run lct, loglc, imult or theorem on a configuration (dict or JSON text)."""
    text = config if isinstance(config, str) else json.dumps(config)
    return _report(_core.config_report(command, text, theorem))


def audit():
    return _report(_core.audit_report())


def scenario(name="all"):
    return _report(_core.scenario_report(name))


def fuzz(seed=42, count=500, threads=0):
    return _report(_core.fuzz_report(seed, count, threads))


def verify(report):
    """Re-check a report (dict or JSON text); returns (ok, verdict)."""
    text = report if isinstance(report, str) else json.dumps(report, indent=2) + "\n"
    return _report(_core.verify_report(text))
