"""Instance generators built from hardness reductions."""

from .balanced import (UndirectedGraph, balancedcut_to_rsm, most_balanced_cut, mostbalanced_to_perfect,
                       perfectly_balanced_cut, random_graph)
from .mcc import MulticoloredGraph, mcc_to_rsm, pad_graph, random_mcc, random_planted_mcc
from .rsep import (RSepInstance, is_rsep_solution, pad_rsep_threshold, padded_certificate, rsep_dist,
                   rsep_solve_brute, rsep_to_rsm)
from .sat import Formula1in3, random_formula, sat1in3_to_rsep, sat_brute, sat_certificate
