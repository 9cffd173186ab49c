"""dynhull: dynamic two-dimensional convex hulls.

Worst-case O(log^2 n) fully dynamic planar convex hull structures with
exact or floating-point arithmetic, a bridge-only variant with cheaper
updates, rank-based hulls over a dynamic value set, static reference
oracles, reproducible dataset generators and a benchmark CLI.
"""

from .kernel import (
    COLLINEAR,
    EXACT,
    INEXACT,
    LEFT_TURN,
    ON_OR_LEFT,
    RIGHT,
    RIGHT_TURN,
    ExactKernel,
    HullEdge,
    InexactKernel,
    Point,
    get_kernel,
)
from .cqueue import CQueue, CQueueCursor
from .hull_ovl import DynamicHull, find_bridge, split_hull
from .hull_eilice import EiliceHull
from .rank_hull import ImplicitBridge, RankHull, materialize_bridge, median_rank_child
from .datagen import Distribution, generate, generate_ints, read_points, to_grid_ints, write_points
from . import errors, oracle

__all__ = [
    "COLLINEAR",
    "CQueue",
    "CQueueCursor",
    "Distribution",
    "DynamicHull",
    "EXACT",
    "EiliceHull",
    "ExactKernel",
    "HullEdge",
    "INEXACT",
    "ImplicitBridge",
    "InexactKernel",
    "LEFT_TURN",
    "ON_OR_LEFT",
    "Point",
    "RIGHT",
    "RIGHT_TURN",
    "RankHull",
    "errors",
    "find_bridge",
    "generate",
    "generate_ints",
    "get_kernel",
    "materialize_bridge",
    "median_rank_child",
    "oracle",
    "read_points",
    "split_hull",
    "to_grid_ints",
    "write_points",
]

__version__ = "0.1.0"
