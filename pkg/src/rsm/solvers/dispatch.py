"""Strategy routing and a threshold search driver."""

from __future__ import annotations

from ..errors import CapExceeded, ValidationError
from ..lattice import DEFAULT_MEMBER_CAP, count_members
from .. import oracle
from .anchored import solve_via_anchors
from .brute import solve_brute
from .enumerative import solve_enumerative
from .instance import Instance, Solution
from .mbdc import solve_fpt_kd
from .poly import solve_d0, solve_k2

ANCHOR_CAP = DEFAULT_MEMBER_CAP
PRODUCT_CAP = DEFAULT_MEMBER_CAP
BUDGET_CAP = 16

STRATEGIES = ("auto", "brute", "d0", "k2", "fpt", "anchored", "enum")


def _minimize_one(inst: Instance) -> Solution:
    Y = inst.lattices[0].u0
    return Solution.build(Y, [Y])


def dispatch(inst: Instance, strategy: str = "auto") -> tuple[Solution | None, str]:
    """Solve ``inst``; returns ``(solution or None, algorithm name)``."""
    if strategy not in STRATEGIES:
        raise ValidationError(f"unknown strategy {strategy!r}; choose from {', '.join(STRATEGIES)}")
    named = {
        "brute": solve_brute,
        "d0": solve_d0,
        "k2": solve_k2,
        "fpt": solve_fpt_kd,
        "anchored": lambda i: solve_via_anchors(i, ANCHOR_CAP),
        "enum": lambda i: solve_enumerative(i, PRODUCT_CAP),
    }
    if strategy != "auto":
        if strategy == "d0" and any(inst.thresholds):
            raise ValidationError("d0 strategy needs every threshold to be zero")
        if strategy == "k2" and inst.k != 2:
            raise ValidationError("k2 strategy needs exactly two functions")
        return named[strategy](inst), strategy
    if inst.k == 0:
        return Solution.build(frozenset(), []), "trivial"
    if not any(inst.thresholds):
        return solve_d0(inst), "d0"
    if inst.k == 1:
        return _minimize_one(inst), "minimize"
    if inst.k == 2:
        return solve_k2(inst), "k2"
    sizes = [count_members(L, ANCHOR_CAP) for L in inst.lattices]
    known = [s for s in sizes if s is not None]
    if known:
        return solve_via_anchors(inst, ANCHOR_CAP), "anchored"
    budget = inst.k * max(inst.thresholds)
    if budget <= BUDGET_CAP:
        return solve_fpt_kd(inst), "fpt"
    n = len(inst.universe)
    limit = oracle.brute_limit()
    if n <= limit:
        return solve_brute(inst), "brute"
    raise CapExceeded(
        "no strategy fits this instance",
        {
            "anchor_cap": (ANCHOR_CAP, "exceeded by every lattice"),
            "budget_cap": (BUDGET_CAP, budget),
            "brute_limit": (limit, n),
        },
    )


def smallest_threshold(inst: Instance, strategy: str = "auto") -> tuple[int, Solution]:
    """Least uniform ``d`` for which ``inst`` is feasible, by binary search.

    Feasibility is monotone in ``d`` and ``d = |V|`` always works.
    """
    lo, hi = 0, len(inst.universe)
    best = None
    while lo < hi:
        mid = (lo + hi) // 2
        sol, _ = dispatch(Instance(inst.universe, inst.functions, mid), strategy)
        if sol is not None:
            hi, best = mid, sol
        else:
            lo = mid + 1
    if best is None:
        best, _ = dispatch(Instance(inst.universe, inst.functions, lo), strategy)
    return lo, best
