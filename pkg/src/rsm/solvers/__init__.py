"""Decision solvers for robust submodular minimization."""

from .anchored import AnchoredInstance, solve_anchored, solve_via_anchors
from .brute import brute_anchored, solve_brute
from .dispatch import STRATEGIES, dispatch, smallest_threshold
from .enumerative import closest_string, solve_enumerative
from .instance import Instance, Solution, Witness, certify, check_solution, verify
from .mbdc import MbdcInstance, build_mbdc, eliminate_forbidden, solve_fpt_kd, solve_mbdc
from .poly import midpoint, solve_d0, solve_k2

__all__ = [
    "AnchoredInstance", "Instance", "MbdcInstance", "STRATEGIES", "Solution", "Witness",
    "brute_anchored", "build_mbdc", "certify", "check_solution", "closest_string", "dispatch",
    "eliminate_forbidden", "midpoint", "smallest_threshold", "solve_anchored", "solve_brute",
    "solve_d0", "solve_enumerative", "solve_fpt_kd", "solve_k2", "solve_mbdc",
    "solve_via_anchors", "verify",
]
