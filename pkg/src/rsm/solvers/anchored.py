"""Anchored search: solutions within ``d0`` of a given anchor set.

Implements the bounded search tree that grows a set ``T`` of elements on
which the anchor must differ from some minimizer of a violated function,
then branches on which element of ``T`` to flip in the anchor.
"""

from __future__ import annotations

from dataclasses import dataclass

from .. import stats
from ..errors import CapExceeded, ValidationError
from ..lattice import DEFAULT_MEMBER_CAP, count_members, enumerate_members, gamma, is_member
from .instance import Instance, Solution, Witness

INF_PART = -1  # index of Uinf inside a partition walk


@dataclass(frozen=True)
class AnchoredInstance:
    instance: Instance
    anchor: frozenset
    d0: int

    def __post_init__(self):
        if not isinstance(self.d0, int) or self.d0 < 0:
            raise ValidationError("anchor budget d0 must be a non-negative integer")
        if not frozenset(self.anchor) <= frozenset(self.instance.universe):
            raise ValidationError("anchor is not a subset of the universe")


def _parts(L):
    """``(index, elements)`` for U0, the blocks, and Uinf, in that order."""
    return [(0, L.u0)] + [(j, blk) for j, blk in enumerate(L.blocks, start=1)] + [(INF_PART, L.uinf)]


def _grow(L, Y0: frozenset, d_i: int, d0: int):
    """Yield every final ``T`` reachable through the guesses.

    ``s`` is treated as a member of U0 and ``t`` of Uinf, so U0 counts as
    split whenever it is not inside ``Y`` and Uinf whenever it meets ``Y``.
    Their containment is known (U0 always in, Uinf always out), so they are
    fixed without guessing.
    """
    parts = _parts(L)
    part_of = {idx: elems for idx, elems in parts}
    edges = [(a, c) for a, c in L.dag if c != 0]

    def split(idx, elems, Y):
        if idx == 0:
            return not elems <= Y
        if idx == INF_PART:
            return bool(elems & Y)
        return bool(elems & Y) and bool(elems - Y)

    def rec(T: frozenset, fixed: frozenset):
        stats.bump("branch_nodes")
        while True:
            Y = Y0 ^ T
            if is_member(L, Y) or len(T) > d_i:
                yield T
                return
            hit = next(((idx, el) for idx, el in parts if split(idx, el, Y)), None)
            if hit is not None:
                idx, S = hit
                options = [True] if idx == 0 else [False] if idx == INF_PART else [True, False]
                for contained in options:
                    grown = T | (S - Y if contained else S & Y)
                    if len(grown) <= d_i + d0:
                        yield from rec(grown, fixed | {idx})
                return
            a, c = next((a, c) for a, c in edges
                        if part_of[a] <= Y and not part_of[c] & Y)
            S, S2 = part_of[a], part_of[c]
            if a in fixed:
                if c in fixed:
                    return
                T, fixed = T | S2, fixed | {c}
            elif c in fixed:
                T, fixed = T | S, fixed | {a}
            else:
                first = T | S2
                if len(first) <= d_i + d0:
                    yield from rec(first, fixed | {a, c})
                second = T | S
                if len(second) <= d_i + d0:
                    yield from rec(second, fixed | {a})
                return
            if len(T) > d_i + d0:
                return

    yield from rec(frozenset(), frozenset())


def solve_anchored(a: AnchoredInstance) -> Solution | None:
    """Set within ``d0`` of the anchor and within ``d_j`` of every lattice, or ``None``."""
    inst = a.instance
    lattices = inst.lattices
    th = inst.thresholds
    memo: dict = {}

    def gam(j, Y):
        key = (j, Y)
        if key not in memo:
            memo[key] = gamma(lattices[j], Y)
        return memo[key]

    def asm(Y0: frozenset, d0: int):
        stats.bump("branch_nodes")
        vals = [gam(j, Y0) for j in range(inst.k)]
        if all(g <= d for (g, _), d in zip(vals, th)):
            return Y0, [Y for _, Y in vals]
        if d0 == 0:
            return None
        i = next(j for j, ((g, _), d) in enumerate(zip(vals, th)) if g > d)
        for T in _grow(lattices[i], Y0, th[i], d0):
            for v in sorted(T):
                found = asm(Y0 ^ {v}, d0 - 1)
                if found is not None:
                    return found
        return None

    found = asm(frozenset(a.anchor), a.d0)
    if found is None:
        return None
    X, members = found
    return Solution.build(X, members)


def solve_via_anchors(inst: Instance, cap: int = DEFAULT_MEMBER_CAP) -> Solution | None:
    """Anchor on every member of the smallest enumerable lattice in turn."""
    if inst.k == 0:
        return Solution.build(frozenset(), [])
    sizes = [count_members(L, cap) for L in inst.lattices]
    usable = [(s, j) for j, s in enumerate(sizes) if s is not None]
    if not usable:
        raise CapExceeded("every lattice exceeds the anchor cap", {"anchor_cap": (cap, None)})
    _, j = min(usable)
    rest = [i for i in range(inst.k) if i != j]
    sub = inst.restrict(rest)
    d_j = inst.thresholds[j]
    for Y0 in enumerate_members(inst.lattices[j], cap):
        sol = solve_anchored(AnchoredInstance(sub, Y0, d_j))
        if sol is not None:
            ws = list(sol.witnesses)
            ws.insert(j, Witness(Y0, len(sol.X ^ Y0)))
            return Solution(sol.X, tuple(ws))
    return None
