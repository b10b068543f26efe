"""Cross-check every path distance implementation on seeded random graphs."""

from dataclasses import dataclass

import numpy as np

from ._validation import Problem, check_problem
from .algo4 import appd_algo4
from .baselines import BRUTE_FORCE_MAX_N, appd_floyd, appd_mst_path, brute_force_appd
from .bench import generate_random_points
from .graph import DenseGraph, complete_graph_from_points

__all__ = ["Failure", "find_violation", "run_verification", "verification_graph"]


@dataclass
class Failure:
    seed: int
    problem: Problem
    check: str
    cell: tuple | None
    detail: str
    graph: DenseGraph

    def __str__(self):
        where = "" if self.cell is None else f" at cell {self.cell}"
        return (
            f"seed {self.seed} (n={self.graph.n}, {self.problem.value}): "
            f"{self.check} failed{where}: {self.detail}"
        )


def verification_graph(n, seed):
    """Random complete graph for ``seed``: even seeds use distinct Euclidean
    weights, odd seeds snap the points to a 4x4 grid so many weights tie."""
    coords = generate_random_points(n, 2, seed).coords
    if seed % 2:
        coords = np.floor(coords * 4.0)
    return complete_graph_from_points(coords)


def _first_diff(a, b):
    diff = np.argwhere(a.view(np.uint64) != b.view(np.uint64))
    return None if len(diff) == 0 else tuple(int(x) for x in diff[0])


def find_violation(graph, problem, algo4=None):
    """Return ``(check, cell, detail)`` for the first failed check, else None."""
    problem = check_problem(problem)
    algo4 = algo4 or appd_algo4
    M = algo4(graph, problem).values
    candidates = [("floyd", appd_floyd), ("mst-path", appd_mst_path)]
    if graph.n <= BRUTE_FORCE_MAX_N:
        candidates.append(("brute-force", brute_force_appd))
    for name, fn in candidates:
        other = fn(graph, problem).values
        cell = _first_diff(M, other)
        if cell is not None:
            return f"algo4 == {name}", cell, f"algo4 {M[cell]!r} vs {name} {other[cell]!r}"

    cell = _first_diff(M, np.ascontiguousarray(M.T))
    if cell is not None:
        return "symmetry", cell, f"{M[cell]!r} vs {M[cell[::-1]]!r}"
    nz = np.flatnonzero(np.diagonal(M))
    if len(nz):
        i = int(nz[0])
        return "zero diagonal", (i, i), repr(M[i, i])
    off = ~np.eye(graph.n, dtype=bool)
    known = np.isin(M, graph.weights[off]) | ~off
    if not known.all():
        cell = tuple(int(x) for x in np.argwhere(~known)[0])
        return "membership", cell, f"{M[cell]!r} is not an edge weight"
    # the zero diagonal is a convention, not a path value, so skip i == j
    for k in range(graph.n):
        if problem is Problem.MINIMAX:
            bad = M > np.maximum(M[:, k, None], M[None, k, :])
        else:
            bad = M < np.minimum(M[:, k, None], M[None, k, :])
        bad &= off
        if bad.any():
            i, j = (int(x) for x in np.argwhere(bad)[0])
            return "ultrametric", (i, j), f"via {k}: {M[i, j]!r}, {M[i, k]!r}, {M[k, j]!r}"
    return None


def run_verification(n_max, seeds, problem="minimax", *, algo4=None):
    """Check ``seeds`` random graphs with sizes cycling through ``2..n_max``.

    Returns ``(graphs_checked, failure)`` where ``failure`` is a
    :class:`Failure` for the first failing graph or None.
    """
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2; got {n_max}")
    problem = check_problem(problem)
    for seed in range(seeds):
        n = 2 + seed % (n_max - 1)
        graph = verification_graph(n, seed)
        found = find_violation(graph, problem, algo4 or appd_algo4)
        if found is not None:
            return seed, Failure(seed, problem, *found, graph)
    return seeds, None
