"""All-pairs minimax and widest path distance matrices for dense undirected graphs."""

__version__ = "0.1.0"

from ._deadline import DeadlineExceeded
from ._validation import InvalidGraphError, Problem
from .algo4 import Forest, appd_algo4, appd_algo4_instrumented
from .baselines import (
    PathEnumeration,
    appd_floyd,
    appd_mst_path,
    brute_force_appd,
    enumerate_paths,
)
from .bench import (
    BenchConfig,
    BenchReport,
    estimate_scaling_exponent,
    generate_random_points,
    matrix_checksum,
    run_benchmark,
)
from .estimator import MinimaxPathDistance
from .graph import (
    CSVFormatError,
    DenseGraph,
    DistanceMatrix,
    PointSet,
    complete_graph_from_points,
    load_graph,
    write_matrix_csv,
)
from .spanning_tree import SpanningTree, TreeEdge, prim_spanning_tree

__all__ = [
    "BenchConfig",
    "BenchReport",
    "CSVFormatError",
    "DeadlineExceeded",
    "DenseGraph",
    "DistanceMatrix",
    "Forest",
    "InvalidGraphError",
    "MinimaxPathDistance",
    "PathEnumeration",
    "PointSet",
    "Problem",
    "SpanningTree",
    "TreeEdge",
    "appd_algo4",
    "appd_algo4_instrumented",
    "appd_floyd",
    "appd_mst_path",
    "brute_force_appd",
    "complete_graph_from_points",
    "enumerate_paths",
    "estimate_scaling_exponent",
    "generate_random_points",
    "load_graph",
    "matrix_checksum",
    "prim_spanning_tree",
    "run_benchmark",
    "write_matrix_csv",
]
