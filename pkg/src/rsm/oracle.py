"""Exhaustive ground-truth routines that share no code with the flow solvers.

Everything here works on bitmasks over an element order (element ``i`` is
bit ``i``), evaluated with numpy over all ``2**n`` masks at once.
"""

from __future__ import annotations

import math
import os
from fractions import Fraction

import numpy as np

from .compact import CompactLattice
from .errors import CapExceeded

DEFAULT_BRUTE_LIMIT = 20


def brute_limit() -> int:
    raw = os.environ.get("RSM_BRUTE_LIMIT")
    return int(raw) if raw else DEFAULT_BRUTE_LIMIT


def check_limit(n: int, limit: int | None = None, what: str = "brute force") -> None:
    limit = brute_limit() if limit is None else limit
    if n > limit:
        raise CapExceeded(f"{what} refused: {n} elements exceed the limit {limit}",
                          {"brute_limit": (limit, n)})


def all_masks(n: int) -> np.ndarray:
    return np.arange(1 << n, dtype=np.int64)


def mask_of(X, order) -> int:
    pos = {v: i for i, v in enumerate(order)}
    m = 0
    for v in X:
        m |= 1 << pos[v]
    return m


def set_of(mask: int, order) -> frozenset:
    return frozenset(v for i, v in enumerate(order) if mask >> i & 1)


def _bit(masks: np.ndarray, i: int) -> np.ndarray:
    return (masks >> i) & 1 == 1


def _integerize(costs):
    """Scale finite exact costs to integers (same argmin); keep an INF flag."""
    finite = [c for c in costs if c != math.inf]
    lcm = 1
    for c in finite:
        if isinstance(c, Fraction):
            lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    scaled = [None if c == math.inf else int(c * lcm) for c in costs]
    big = sum(x for x in scaled if x is not None) >= 2**62
    return scaled, big


def cut_values(universe, edges, source="s", sink="t"):
    """Cut value of ``X + {source}`` for every mask ``X``.

    Returns ``(values, infinite)``: ``values`` holds scaled finite totals and
    ``infinite`` flags masks crossed by an infinite edge.
    """
    n = len(universe)
    pos = {v: i for i, v in enumerate(universe)}
    masks = all_masks(n)
    scaled, big = _integerize([c for _, _, c in edges])
    values = np.zeros(len(masks), dtype=object if big else np.int64)
    infinite = np.zeros(len(masks), dtype=bool)
    ones = np.ones(len(masks), dtype=bool)
    zeros = ~ones

    def side(v):
        if v == source:
            return ones
        if v == sink:
            return zeros
        return _bit(masks, pos[v])

    for (u, v, _), c in zip(edges, scaled):
        crossing = side(u) & ~side(v)
        if c is None:
            infinite |= crossing
        elif c:
            values = values + crossing.astype(values.dtype) * c
    return values, infinite


def cut_argmin_masks(universe, edges) -> np.ndarray:
    values, infinite = cut_values(universe, edges)
    if infinite.all():
        return np.zeros(0, dtype=np.int64)
    finite = values[~infinite]
    best = finite.min()
    return np.flatnonzero((~infinite) & (values == best)).astype(np.int64)


def lattice_member_masks(L: CompactLattice, order) -> np.ndarray:
    """Masks satisfying the compact-lattice membership rule, checked literally."""
    n = len(order)
    pos = {v: i for i, v in enumerate(order)}
    masks = all_masks(n)
    ok = np.ones(len(masks), dtype=bool)
    for v in L.u0:
        ok &= _bit(masks, pos[v])
    for v in L.uinf:
        ok &= ~_bit(masks, pos[v])
    chosen = [np.ones(len(masks), dtype=bool)]
    for blk in L.blocks:
        bits = [_bit(masks, pos[v]) for v in blk]
        every = np.logical_and.reduce(bits)
        some = np.logical_or.reduce(bits)
        ok &= every | ~some
        chosen.append(every)
    for a, c in L.dag:
        ok &= ~chosen[a] | chosen[c]
    return np.flatnonzero(ok).astype(np.int64)


def member_masks(f, order) -> np.ndarray:
    """All minimizers of ``f`` as masks over ``order``, by exhaustive scan."""
    kind = f.kind
    if kind == "cut":
        return cut_argmin_masks(tuple(order), f.graph.edges)
    if kind == "explicit":
        return np.array(sorted(mask_of(Y, order) for Y in f.family), dtype=np.int64)
    return lattice_member_masks(f.lattice, order)


def distance_to_family(n: int, members: np.ndarray):
    """Hamming distance from every mask to the nearest member, with witnesses.

    A distance transform over the hypercube: one relaxation pass per
    dimension.  Ties keep the smaller witness mask.
    """
    size = 1 << n
    big = n + 1
    dist = np.full(size, big, dtype=np.int64)
    wit = np.full(size, -1, dtype=np.int64)
    dist[members] = 0
    wit[members] = members
    idx = all_masks(n)
    for i in range(n):
        other = idx ^ (1 << i)
        cand = dist[other] + 1
        cw = wit[other]
        better = (cand < dist) | ((cand == dist) & (cw < wit) & (cw >= 0))
        dist = np.where(better, cand, dist)
        wit = np.where(better, cw, wit)
    return dist, wit


def brute_minimizers(f, order) -> list[frozenset]:
    return [set_of(int(m), order) for m in member_masks(f, order)]


def brute_gamma(f, order, Z) -> int:
    z = mask_of(Z, order)
    members = member_masks(f, order)
    return int(min(bin(int(m) ^ z).count("1") for m in members))
