"""Exact leaky forcing numbers of graphs.

Z_l(G) is the smallest initial colored set that still colors all of G
under zero forcing when any l vertices are barred from forcing (leaks).
It is computed by fort constraint generation over an exact set-multicover
solver, with closed-form family values and an exhaustive oracle for
cross-checking.
"""

__version__ = "0.1.0"

from .bruteforce import brute_force_z, enumerate_forts
from .cover import (
    CoverInstance,
    CoverSolution,
    disjoint_fort_lower_bound,
    greedy_upper_bound,
    solve_multicover,
)
from .errors import (
    FortError,
    GraphParseError,
    GraphValidationError,
    InfeasibleCoverError,
    InternalLogicError,
    LeakyForceError,
    ParameterError,
    ResourceLimitError,
    VertexDomainError,
)
from .families import (
    ClosedForm,
    GridPattern,
    closed_form_z,
    grid_pattern,
    product_upper_bound,
    tree_z1,
    verify_pattern,
)
from .forcing import Verdict, closure, verify_l_forcing
from .forts import Fort, extract_fort, minimize_fort, seed_forts
from .graph import (
    FamilySpec,
    Graph,
    build_family,
    cartesian_product,
    complete,
    cycle,
    grid,
    hypercube,
    parse_edge_list,
    parse_graph6,
    path,
    random_regular,
    star,
    to_graph6,
    wheel,
)
from .kernels import HAVE_COMPILED
from .solver import SolveResult, compute_l_forcing_number, compute_with_redundancy
