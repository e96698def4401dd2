"""Generalized sorting: recover a hidden acyclic orientation with few probes."""

from .analysis import ParamEstimate, estimate_k, greedy_coloring, max_clique, max_clique_exact
from .cliquesolve import clique_solve, direct_edges, pivot, select, select_reversed
from .colorsolve import Coloring, add_edges, color_solve, merge_sort_class, validate_coloring
from .core import (
    ComparisonGraph,
    ForbiddenGraph,
    GroundTruth,
    OrientationStore,
    ProbeOracle,
    ScaffoldGraph,
    forbidden_graph,
    reachable,
    validate_orientation,
)
from .generators import InstanceSpec, gen_er, gen_nuts_bolts, gen_stochastic
from .io import load_graph
from .solvers import brute_force_solve, hybrid_solve, solve, verify

__version__ = "0.1.0"
