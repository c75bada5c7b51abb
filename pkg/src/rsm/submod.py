"""The three concrete submodular function kinds and their minimizer lattices.

* :class:`CutFunction` - ``X -> cost of edges leaving X + {s}`` in a digraph
  over ``V + {s, t}``;
* :class:`ExplicitFunction` - given directly by its (lattice-closed) family of
  minimizers;
* :class:`LatticeFunction` - given by a :class:`CompactLattice`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .compact import CompactLattice
from .errors import InfiniteCutError, ValidationError
from .flow import INF, DiGraph, max_flow, min_cut, residual_condensation
from .lattice import SINK, SOURCE


def check_universe(universe) -> tuple:
    universe = tuple(universe)
    if len(set(universe)) != len(universe):
        raise ValidationError("duplicate element in universe")
    for v in universe:
        if not isinstance(v, str):
            raise ValidationError(f"element ids must be strings, got {v!r}")
        if v in (SOURCE, SINK):
            raise ValidationError(f"element id {v!r} is reserved for the source/sink")
    return universe


@dataclass(frozen=True)
class CutFunction:
    universe: tuple
    graph: DiGraph

    kind = "cut"

    def __post_init__(self):
        check_universe(self.universe)
        if set(self.graph.vertices) != set(self.universe) | {SOURCE, SINK}:
            raise ValidationError("cut graph vertex set must be exactly V + {s, t}")

    @classmethod
    def from_edges(cls, universe, edges) -> "CutFunction":
        universe = tuple(universe)
        return cls(universe, DiGraph.build((SOURCE, SINK, *universe), edges))


@dataclass(frozen=True)
class ExplicitFunction:
    universe: tuple
    family: frozenset  # of frozensets

    kind = "explicit"

    def __post_init__(self):
        check_universe(self.universe)
        if not self.family:
            raise ValidationError("explicit minimizer family must be non-empty")
        ground = frozenset(self.universe)
        for Y in self.family:
            if not Y <= ground:
                raise ValidationError(f"minimizer {sorted(Y)} is not a subset of the universe")
        fam = self.family
        for A in fam:
            for B in fam:
                if A | B not in fam or A & B not in fam:
                    raise ValidationError("lattice closure violated: family is not closed "
                                          "under union and intersection")

    @classmethod
    def of(cls, universe, family) -> "ExplicitFunction":
        return cls(tuple(universe), frozenset(frozenset(Y) for Y in family))


@dataclass(frozen=True)
class LatticeFunction:
    lattice: CompactLattice

    kind = "lattice"

    @property
    def universe(self) -> tuple:
        return self.lattice.universe


FunctionSpec = Union[CutFunction, ExplicitFunction, LatticeFunction]


def evaluate(f: CutFunction, X):
    """``lambda(X)``: cost of the edges leaving ``X + {s}``."""
    if not isinstance(f, CutFunction):
        raise TypeError("evaluate is defined for cut functions only")
    X = frozenset(X)
    if not X <= frozenset(f.universe):
        raise ValidationError("X is not a subset of the universe")
    return f.graph.cut_value(X | {SOURCE})


def minimize(f: FunctionSpec):
    """Return ``(value, minimizer)``; ``value`` is ``None`` for non-cut kinds."""
    if isinstance(f, CutFunction):
        try:
            cut = min_cut(f.graph, SOURCE, SINK)
        except InfiniteCutError:
            raise InfiniteCutError("no finite minimizer: every cut is infinite") from None
        return cut.value, frozenset(cut.members - {SOURCE})
    if isinstance(f, ExplicitFunction):
        return None, frozenset.intersection(*f.family)
    return None, f.lattice.u0


def _explicit_lattice(f: ExplicitFunction) -> CompactLattice:
    members = sorted(f.family, key=lambda Y: (len(Y), sorted(Y)))
    pattern = {v: frozenset(i for i, Y in enumerate(members) if v in Y) for v in f.universe}
    everything = frozenset(range(len(members)))
    u0 = {v for v, p in pattern.items() if p == everything}
    uinf = {v for v, p in pattern.items() if not p}
    groups: dict = {}
    for v in f.universe:
        p = pattern[v]
        if p and p != everything:
            groups.setdefault(p, set()).add(v)
    keys = list(groups)
    edges = set()
    for a, pa in enumerate(keys, start=1):
        edges.add((a, 0))
        for c, pc in enumerate(keys, start=1):
            # every member containing block a also contains block c
            if a != c and pa <= pc:
                edges.add((a, c))
    return CompactLattice.create(f.universe, u0, [groups[p] for p in keys], uinf, edges)


def to_lattice(f: FunctionSpec) -> CompactLattice:
    """Compact representation of ``argmin f``."""
    if isinstance(f, CutFunction):
        value, residual = max_flow(f.graph, SOURCE, SINK)
        if value == INF:
            raise InfiniteCutError("no finite minimizer: every cut is infinite")
        return residual_condensation(f.graph, residual, SOURCE, SINK, f.universe)
    if isinstance(f, ExplicitFunction):
        return _explicit_lattice(f)
    return f.lattice
