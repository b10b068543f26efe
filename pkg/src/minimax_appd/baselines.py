"""Reference all-pairs path distance algorithms used for cross-checking.

* :func:`appd_floyd` -- Floyd-Warshall with (min, max) relaxation, O(n^3).
* :func:`appd_mst_path` -- spanning tree plus an explicit tree-path walk.
* :func:`brute_force_appd` -- enumerates every simple path; tiny graphs only.
"""

import itertools
from dataclasses import dataclass

import numpy as np
from numba import njit

from ._deadline import check_deadline
from ._validation import Problem, check_problem
from .graph import DenseGraph, DistanceMatrix
from .spanning_tree import prim_spanning_tree

__all__ = [
    "BRUTE_FORCE_MAX_N",
    "PathEnumeration",
    "appd_floyd",
    "appd_mst_path",
    "brute_force_appd",
    "enumerate_paths",
]

BRUTE_FORCE_MAX_N = 8


def _as_graph(graph):
    return graph if isinstance(graph, DenseGraph) else DenseGraph(graph)


# -- Floyd-Warshall ---------------------------------------------------------


@njit(cache=True, nogil=True)
def _relax_minimax(D, i0, i1, j0, j1, k0, k1):
    for k in range(k0, k1):
        for i in range(i0, i1):
            dik = D[i, k]
            for j in range(j0, j1):
                m = dik if dik > D[k, j] else D[k, j]
                if m < D[i, j]:
                    D[i, j] = m


@njit(cache=True, nogil=True)
def _relax_widest(D, i0, i1, j0, j1, k0, k1):
    for k in range(k0, k1):
        for i in range(i0, i1):
            dik = D[i, k]
            for j in range(j0, j1):
                m = dik if dik < D[k, j] else D[k, j]
                if m > D[i, j]:
                    D[i, j] = m


@njit(cache=True, nogil=True)
def _relax(D, i0, i1, j0, j1, k0, k1, widest):
    if widest:
        _relax_widest(D, i0, i1, j0, j1, k0, k1)
    else:
        _relax_minimax(D, i0, i1, j0, j1, k0, k1)


@njit(cache=True, nogil=True)
def _floyd_round(D, k0, B, widest):
    # one round of tiled Floyd-Warshall for intermediates k0 .. k0+B-1:
    # pivot tile, then its row and column of tiles, then everything else
    n = D.shape[0]
    k1 = min(k0 + B, n)
    _relax(D, k0, k1, k0, k1, k0, k1, widest)
    for j0 in range(0, n, B):
        if j0 != k0:
            _relax(D, k0, k1, j0, min(j0 + B, n), k0, k1, widest)
    for i0 in range(0, n, B):
        if i0 != k0:
            _relax(D, i0, min(i0 + B, n), k0, k1, k0, k1, widest)
    for i0 in range(0, n, B):
        if i0 == k0:
            continue
        for j0 in range(0, n, B):
            if j0 != k0:
                _relax(D, i0, min(i0 + B, n), j0, min(j0 + B, n), k0, k1, widest)


def appd_floyd(graph, problem="minimax", *, block_size=64, deadline=None):
    """Floyd-Warshall variant for minimax (or widest) path distances.

    Minimax relaxes ``D[i, j] = min(D[i, j], max(D[i, k], D[k, j]))`` for each
    intermediate ``k``; widest swaps ``min`` and ``max``. The loops are tiled
    into ``block_size`` squares so the working set stays in cache; the
    intermediate block is still the outermost loop. ``block_size=None``
    gives the textbook k-i-j triple loop.

    ``deadline`` is polled once per intermediate block.
    """
    graph = _as_graph(graph)
    problem = check_problem(problem)
    n = graph.n
    B = n if block_size is None else int(block_size)
    if B < 1:
        raise ValueError(f"block_size must be positive; got {block_size}")
    D = np.array(graph.weights, order="C")
    widest = problem is Problem.WIDEST
    for k0 in range(0, n, B):
        check_deadline(deadline)
        _floyd_round(D, k0, B, widest)
    # a loop through a negative (minimax) or positive (widest) edge can
    # overwrite the diagonal; off-diagonal cells never read it to their benefit
    np.fill_diagonal(D, 0.0)
    return DistanceMatrix(D, problem, copy=False)


# -- spanning tree path walk -------------------------------------------------


@njit(cache=True, nogil=True)
def _root_tree(n, eu, ev, ew):
    start = np.zeros(n + 1, dtype=np.int64)
    for e in range(eu.shape[0]):
        start[eu[e] + 1] += 1
        start[ev[e] + 1] += 1
    for i in range(n):
        start[i + 1] += start[i]
    fill = start[:-1].copy()
    nbr = np.empty(2 * eu.shape[0], dtype=np.int64)
    nw = np.empty(2 * eu.shape[0])
    for e in range(eu.shape[0]):
        nbr[fill[eu[e]]] = ev[e]
        nw[fill[eu[e]]] = ew[e]
        fill[eu[e]] += 1
        nbr[fill[ev[e]]] = eu[e]
        nw[fill[ev[e]]] = ew[e]
        fill[ev[e]] += 1
    parent = np.full(n, -1, dtype=np.int64)
    up = np.zeros(n)
    depth = np.zeros(n, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    queue[0] = 0
    seen = np.zeros(n, dtype=np.bool_)
    seen[0] = True
    head, tail = 0, 1
    while head < tail:
        x = queue[head]
        head += 1
        for p in range(start[x], start[x + 1]):
            y = nbr[p]
            if not seen[y]:
                seen[y] = True
                parent[y] = x
                up[y] = nw[p]
                depth[y] = depth[x] + 1
                queue[tail] = y
                tail += 1
    return parent, up, depth


@njit(cache=True, nogil=True)
def _walk_rows(parent, up, depth, widest, D, i0, i1):
    n = D.shape[0]
    for i in range(i0, i1):
        for j in range(i + 1, n):
            a = i
            b = j
            best = up[a] if depth[a] >= depth[b] else up[b]
            while a != b:
                if depth[a] >= depth[b]:
                    w = up[a]
                    a = parent[a]
                else:
                    w = up[b]
                    b = parent[b]
                if (w < best) if widest else (w > best):
                    best = w
            D[i, j] = best
            D[j, i] = best


def appd_mst_path(graph, problem="minimax", *, deadline=None):
    """Path distances read off the unique spanning-tree path of every pair.

    The tree (minimum for minimax, maximum for widest) is rooted at vertex 0;
    each pair climbs to its lowest common ancestor while keeping the largest
    (minimax) or smallest (widest) edge weight seen.
    """
    graph = _as_graph(graph)
    problem = check_problem(problem)
    sense = "minimum" if problem is Problem.MINIMAX else "maximum"
    tree = prim_spanning_tree(graph, sense, deadline=deadline)
    n = graph.n
    D = np.zeros((n, n))
    if n > 1:
        parent, up, depth = _root_tree(n, tree.u, tree.v, tree.weight)
        widest = problem is Problem.WIDEST
        step = 64
        for i0 in range(0, n, step):
            check_deadline(deadline)
            _walk_rows(parent, up, depth, widest, D, i0, min(i0 + step, n))
    return DistanceMatrix(D, problem, copy=False)


# -- exhaustive enumeration ----------------------------------------------------


@dataclass(frozen=True)
class PathEnumeration:
    """Every simple path between two vertices and its extreme edge weight.

    ``extremes[k]`` is the largest (minimax) or smallest (widest) edge weight
    on ``paths[k]``.
    """

    source: int
    target: int
    problem: Problem
    paths: tuple
    extremes: tuple

    @property
    def distance(self):
        if self.problem is Problem.MINIMAX:
            return min(self.extremes)
        return max(self.extremes)


def enumerate_paths(graph, source, target, problem="minimax"):
    graph = _as_graph(graph)
    problem = check_problem(problem)
    W = graph.weights.tolist()
    extreme = max if problem is Problem.MINIMAX else min
    others = [x for x in range(graph.n) if x not in (source, target)]
    paths = []
    extremes = []
    for k in range(len(others) + 1):
        for middle in itertools.permutations(others, k):
            path = (source, *middle, target)
            paths.append(path)
            extremes.append(extreme(W[a][b] for a, b in zip(path, path[1:])))
    return PathEnumeration(source, target, problem, tuple(paths), tuple(extremes))


def brute_force_appd(graph, problem="minimax"):
    """Path distances by enumerating all simple paths of every pair.

    Only for ``n <= 8``; the number of simple paths grows factorially.
    """
    graph = _as_graph(graph)
    problem = check_problem(problem)
    n = graph.n
    if n > BRUTE_FORCE_MAX_N:
        raise ValueError(
            f"brute force enumeration is limited to n <= {BRUTE_FORCE_MAX_N} "
            f"(a complete graph on {n} vertices has too many simple paths); "
            "use appd_floyd instead"
        )
    D = np.zeros((n, n))
    for i, j in itertools.combinations(range(n), 2):
        D[i, j] = D[j, i] = enumerate_paths(graph, i, j, problem).distance
    return DistanceMatrix(D, problem, copy=False)

