"""Odd multiway cut on DAGs: exact and approximate solvers, gadgets, LP certificates."""

from fractions import Fraction

from . import _core
from ._core import (
    Instance,
    OddcutError,
    ParseError,
    brute_force_solve,
    has_odd_path,
    mwc_gadget,
    run_cli,
    shadows,
    solve_exact,
    solve_minimum,
    vc_gadget,
    verify_solution,
)

__all__ = [
    "Instance",
    "OddcutError",
    "ParseError",
    "approx2",
    "brute_force_solve",
    "escher_report",
    "has_odd_path",
    "mwc_gadget",
    "run_cli",
    "shadows",
    "solve_exact",
    "solve_minimum",
    "star_gap",
    "vc_gadget",
    "verify_solution",
]


def approx2(instance, s, t):
    """Edge entries of a 2-approximate odd s->t blocker and their cost, or None."""
    found = _core.approx2(instance, s, t)
    if found is None:
        return None
    edges, cost = found
    return edges, Fraction(cost)


def star_gap(k):
    """Star gadget instance and its fractional witness."""
    instance, witness = _core.star_gap(k)
    return instance, [Fraction(x) for x in witness]


def escher_report():
    """Certificate checks on the eight-path wall, rationals as Fraction."""
    report = _core.escher_report()
    for key in ("primal_value", "dual_value", "gap"):
        report[key] = Fraction(report[key])
    report["primal"] = [Fraction(x) for x in report["primal"]]
    return report
