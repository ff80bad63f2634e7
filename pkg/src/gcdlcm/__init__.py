"""Smallest subsets preserving the gcd or lcm of an integer set.

The library reduces both objectives to minimum cover over a coprime
basis, solves covers greedily or exactly, maps solutions back, and
applies the machinery to pruning circulant-graph links. Hot search
kernels run from a compiled extension when available; set GCDLCM_PURE=1
to force the pure-Python fallback.
"""

from gcdlcm._kernel import kernel_backend
from gcdlcm.basis import CoprimeBasis, compute_basis, exponent_profile
from gcdlcm.circulant import (
    BFS_NODE_CAP,
    CirculantGraph,
    is_connected_bfs,
    is_connected_gcd,
    prune_links,
)
from gcdlcm.errors import CapExceededError, DomainError, InfeasibleError
from gcdlcm.generate import SplitMix64, generate_instance
from gcdlcm.numeric import NatSet, gcd_set, input_size, lcm_set, natset
from gcdlcm.reductions import (
    BEliminationMap,
    CoverImage,
    CoverReduction,
    cover_to_gcd,
    cover_to_lcm,
    eliminate_b,
    gcd_to_cover,
    lcm_to_cover,
)
from gcdlcm.setcover import (
    CoverInstance,
    CoverSolution,
    decide_cover,
    exact_cover,
    greedy_cover,
)
from gcdlcm.solver import (
    BRUTE_FORCE_CAP,
    ProblemInstance,
    SolveStats,
    SubsetSolution,
    brute_force,
    decide,
    reduce_instance,
    solve,
)

__version__ = "0.1.0"

__all__ = [
    "BEliminationMap",
    "BFS_NODE_CAP",
    "BRUTE_FORCE_CAP",
    "CapExceededError",
    "CirculantGraph",
    "CoprimeBasis",
    "CoverImage",
    "CoverInstance",
    "CoverReduction",
    "CoverSolution",
    "DomainError",
    "InfeasibleError",
    "NatSet",
    "ProblemInstance",
    "SolveStats",
    "SplitMix64",
    "SubsetSolution",
    "brute_force",
    "compute_basis",
    "cover_to_gcd",
    "cover_to_lcm",
    "decide",
    "decide_cover",
    "eliminate_b",
    "exact_cover",
    "exponent_profile",
    "gcd_set",
    "gcd_to_cover",
    "generate_instance",
    "greedy_cover",
    "input_size",
    "is_connected_bfs",
    "is_connected_gcd",
    "kernel_backend",
    "lcm_set",
    "lcm_to_cover",
    "natset",
    "prune_links",
    "reduce_instance",
    "solve",
]
