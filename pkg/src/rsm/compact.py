"""Compact (Birkhoff) representation of a distributive lattice of subsets.

A lattice over a ground set is stored as a partition ``U0, U1..Ub, Uinf`` plus
a DAG on the indices ``0..b`` (index 0 is ``U0``).  An edge ``(a, b)`` reads
"whenever block ``a`` is chosen, block ``b`` must be chosen too".  The members
are exactly ``U0`` united with the blocks of a set of indices that is closed
under outgoing edges.  ``U0`` is the unique sink.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import ValidationError


@dataclass(frozen=True)
class CompactLattice:
    universe: tuple
    u0: frozenset
    blocks: tuple
    uinf: frozenset
    dag: tuple

    def __post_init__(self):
        seen = set(self.u0) | set(self.uinf)
        if self.u0 & self.uinf:
            raise ValidationError("U0 and Uinf overlap")
        for blk in self.blocks:
            if not blk:
                raise ValidationError("empty block in compact lattice")
            if seen & blk:
                raise ValidationError("blocks of a compact lattice must be disjoint")
            seen |= blk
        if seen != set(self.universe):
            raise ValidationError("blocks do not partition the universe")
        b = len(self.blocks)
        for a, c in self.dag:
            if not (0 <= a <= b and 0 <= c <= b) or a == c:
                raise ValidationError(f"bad DAG edge {(a, c)}")
            if a == 0:
                raise ValidationError("U0 must be a sink of the DAG")
        if _has_cycle(b + 1, self.dag):
            raise ValidationError("lattice DAG has a cycle")
        tails = {a for a, _ in self.dag}
        for j in range(1, b + 1):
            if j not in tails:
                raise ValidationError("U0 must be the unique sink of the DAG")

    @classmethod
    def create(cls, universe: Iterable, u0, blocks, uinf, edges) -> "CompactLattice":
        """Build the canonical form.

        Blocks are sorted by their first element in universe order, every
        non-U0 sink gets an edge to U0, and the DAG is transitively reduced.
        Membership semantics are unchanged by any of these steps.
        """
        universe = tuple(universe)
        pos = {v: i for i, v in enumerate(universe)}
        blocks = [frozenset(bk) for bk in blocks]
        if any(not bk for bk in blocks):
            raise ValidationError("empty block in compact lattice")
        order = sorted(range(len(blocks)), key=lambda i: min(pos[v] for v in blocks[i]))
        remap = {0: 0}
        for new, old in enumerate(order, start=1):
            remap[old + 1] = new
        new_blocks = tuple(blocks[i] for i in order)
        n = len(new_blocks) + 1
        es = set()
        for a, c in edges:
            a, c = int(a), int(c)
            if a not in remap or c not in remap:
                raise ValidationError(f"DAG edge {(a, c)} references a missing block")
            a, c = remap[a], remap[c]
            if a == c:
                raise ValidationError("self-loop in lattice DAG")
            if a == 0:
                raise ValidationError("U0 must be a sink of the DAG")
            es.add((a, c))
        if _has_cycle(n, es):
            raise ValidationError("lattice DAG has a cycle")
        tails = {a for a, _ in es}
        es |= {(j, 0) for j in range(1, n) if j not in tails}
        return cls(universe, frozenset(u0), new_blocks, frozenset(uinf),
                   tuple(sorted(transitive_reduction(n, es))))

    @property
    def b(self) -> int:
        return len(self.blocks)

    def part(self, idx: int) -> frozenset:
        return self.u0 if idx == 0 else self.blocks[idx - 1]

    def successors(self) -> list[list[int]]:
        out = [[] for _ in range(self.b + 1)]
        for a, c in self.dag:
            out[a].append(c)
        return out

    def block_of(self) -> dict:
        """Map each element to its block index; ``Uinf`` elements map to ``None``."""
        idx = {v: None for v in self.uinf}
        idx.update({v: 0 for v in self.u0})
        for j, blk in enumerate(self.blocks, start=1):
            idx.update({v: j for v in blk})
        return idx


def _has_cycle(n: int, edges) -> bool:
    out = [[] for _ in range(n)]
    indeg = [0] * n
    for a, c in edges:
        out[a].append(c)
        indeg[c] += 1
    stack = [i for i in range(n) if indeg[i] == 0]
    done = 0
    while stack:
        u = stack.pop()
        done += 1
        for w in out[u]:
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    return done != n


def transitive_reduction(n: int, edges) -> set:
    """Transitive reduction of a DAG given as an edge set over ``range(n)``."""
    out = [set() for _ in range(n)]
    for a, c in edges:
        out[a].add(c)
    reach: list = [None] * n

    def reach_of(u):
        # iterative post-order: reach[u] = all nodes strictly reachable from u
        if reach[u] is not None:
            return reach[u]
        stack = [(u, iter(out[u]))]
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                stack.pop()
                acc = set()
                for w in out[node]:
                    acc.add(w)
                    acc |= reach[w]
                reach[node] = acc
            elif reach[nxt] is None:
                stack.append((nxt, iter(out[nxt])))
        return reach[u]

    kept = set()
    for a in range(n):
        via = set()
        for c in out[a]:
            via |= reach_of(c)
        kept |= {(a, c) for c in out[a] if c not in via}
    return kept
