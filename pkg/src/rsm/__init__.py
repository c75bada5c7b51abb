"""Robust submodular minimization: solvers, oracles, and instance generators."""

from .compact import CompactLattice
from .errors import CapExceeded, InfiniteCutError, LatticeOverflow, RSMError, ValidationError
from .flow import INF, CutSide, DiGraph, max_flow, min_cut, residual_condensation
from .lattice import enumerate_members, expand_graph, gamma, is_member
from .submod import CutFunction, ExplicitFunction, LatticeFunction, evaluate, minimize, to_lattice

__version__ = "0.1.0"
