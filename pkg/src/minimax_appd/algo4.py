"""Calculate-and-copy all-pairs minimax / widest path distances in O(n^2).

Every pair of vertices is separated by exactly one spanning-tree edge when
the tree edges are deleted one at a time from the heaviest (minimax) or the
lightest (widest) downwards. Deleting edge ``(u, v, w)`` splits its component
into the part holding ``u`` and the part holding ``v``; ``w`` is the path
distance of every pair straddling the two parts, so it is copied into all of
those cells and never touched again.
"""

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from numba import njit

from ._deadline import check_deadline
from ._validation import Problem, check_problem
from .graph import DenseGraph, DistanceMatrix
from .spanning_tree import prim_spanning_tree

__all__ = ["Forest", "appd_algo4", "appd_algo4_instrumented", "removal_order"]

# edge removals between two deadline polls
_CHUNK = 256


@njit(cache=True, nogil=True)
def _build_adjacency(n, eu, ev):
    start = np.zeros(n + 1, dtype=np.int64)
    for e in range(eu.shape[0]):
        start[eu[e] + 1] += 1
        start[ev[e] + 1] += 1
    for i in range(n):
        start[i + 1] += start[i]
    live = np.zeros(n, dtype=np.int64)
    nbr = np.empty(2 * eu.shape[0], dtype=np.int64)
    for e in range(eu.shape[0]):
        u = eu[e]
        v = ev[e]
        nbr[start[u] + live[u]] = v
        live[u] += 1
        nbr[start[v] + live[v]] = u
        live[v] += 1
    return start, nbr, live


@njit(cache=True, nogil=True)
def _unlink(start, nbr, live, a, b):
    # drop b from a's live segment by swapping it past the end
    end = start[a] + live[a]
    for p in range(start[a], end):
        if nbr[p] == b:
            nbr[p] = nbr[end - 1]
            nbr[end - 1] = b
            live[a] -= 1
            return True
    return False


@njit(cache=True, nogil=True)
def _collect(start, nbr, live, root, mark, stamp, stack, out):
    mark[root] = stamp
    stack[0] = root
    sp = 1
    k = 0
    while sp > 0:
        sp -= 1
        x = stack[sp]
        out[k] = x
        k += 1
        for p in range(start[x], start[x] + live[x]):
            y = nbr[p]
            if mark[y] != stamp:
                mark[y] = stamp
                stack[sp] = y
                sp += 1
    return k


@njit(cache=True, nogil=True)
def _skip_removals(start, nbr, live, eu, ev, order, first, last):
    for r in range(first, last):
        e = order[r]
        _unlink(start, nbr, live, eu[e], ev[e])
        _unlink(start, nbr, live, ev[e], eu[e])


@njit(cache=True, nogil=True)
def _calc_and_copy(
    start, nbr, live, eu, ev, ew, order, first, last,
    values, mark, stack, buf1, buf2, state,
):
    # state: [traversal stamp, pair writes, vertices visited]
    for r in range(first, last):
        e = order[r]
        u = eu[e]
        v = ev[e]
        w = ew[e]
        _unlink(start, nbr, live, u, v)
        _unlink(start, nbr, live, v, u)
        state[0] += 1
        n1 = _collect(start, nbr, live, u, mark, state[0], stack, buf1)
        n2 = _collect(start, nbr, live, v, mark, state[0], stack, buf2)
        state[2] += n1 + n2
        # ascending ids give row-ordered stores in both triangles
        tree1 = np.sort(buf1[:n1])
        tree2 = np.sort(buf2[:n2])
        for i in range(n1):
            a = tree1[i]
            for j in range(n2):
                values[a, tree2[j]] = w
        for j in range(n2):
            b = tree2[j]
            for i in range(n1):
                values[b, tree1[i]] = w
        state[1] += n1 * n2


class Forest:
    """Mutable forest obtained by deleting edges from a spanning tree.

    Adjacency is a CSR layout in which each vertex owns a slot of its tree
    degree; the first ``live[x]`` entries of vertex ``x``'s slot are its
    current neighbours. Deleting an edge is an O(degree) swap in both slots.
    """

    def __init__(self, tree):
        self.tree = tree
        self.n = tree.n
        self.start, self.nbr, self.live = _build_adjacency(tree.n, tree.u, tree.v)
        self._mark = np.zeros(tree.n, dtype=np.int64)
        self._stack = np.empty(tree.n, dtype=np.int64)
        self._buf1 = np.empty(tree.n, dtype=np.int64)
        self._buf2 = np.empty(tree.n, dtype=np.int64)
        self._state = np.zeros(3, dtype=np.int64)

    def copy(self):
        other = Forest.__new__(Forest)
        other.tree = self.tree
        other.n = self.n
        other.start = self.start
        other.nbr = self.nbr.copy()
        other.live = self.live.copy()
        other._mark = np.zeros(self.n, dtype=np.int64)
        other._stack = np.empty(self.n, dtype=np.int64)
        other._buf1 = np.empty(self.n, dtype=np.int64)
        other._buf2 = np.empty(self.n, dtype=np.int64)
        other._state = np.zeros(3, dtype=np.int64)
        return other

    @property
    def n_edges(self):
        return int(self.live.sum()) // 2

    def neighbors(self, x):
        s = self.start[x]
        return self.nbr[s : s + self.live[x]].copy()

    def remove(self, u, v):
        if not (_unlink(self.start, self.nbr, self.live, u, v)
                and _unlink(self.start, self.nbr, self.live, v, u)):
            raise KeyError(f"edge ({u}, {v}) is not in the forest")

    def component(self, root):
        """Sorted vertex ids reachable from ``root``."""
        self._state[0] += 1
        k = _collect(
            self.start, self.nbr, self.live, root,
            self._mark, self._state[0], self._stack, self._buf1,
        )
        return np.sort(self._buf1[:k])

    def n_components(self):
        seen = np.zeros(self.n, dtype=bool)
        count = 0
        for x in range(self.n):
            if not seen[x]:
                seen[self.component(x)] = True
                count += 1
        return count

    def _drain(self, order, first, last, values, deadline):
        tree = self.tree
        for lo in range(first, last, _CHUNK):
            check_deadline(deadline)
            _calc_and_copy(
                self.start, self.nbr, self.live, tree.u, tree.v, tree.weight,
                order, lo, min(lo + _CHUNK, last), values,
                self._mark, self._stack, self._buf1, self._buf2, self._state,
            )


def removal_order(tree, problem="minimax"):
    """Indices of tree edges in deletion order.

    Heaviest first for minimax, lightest first for widest; equal weights keep
    Prim's insertion order.
    """
    problem = check_problem(problem)
    seq = np.arange(len(tree.weight))
    key = -tree.weight if problem is Problem.MINIMAX else tree.weight
    return np.lexsort((seq, key))


def _prepare(graph, problem, deadline):
    if not isinstance(graph, DenseGraph):
        graph = DenseGraph(graph)
    problem = check_problem(problem)
    sense = "minimum" if problem is Problem.MINIMAX else "maximum"
    tree = prim_spanning_tree(graph, sense, deadline=deadline)
    return graph, problem, tree, removal_order(tree, problem)


def _parallel_fill(forest, order, values, n_jobs, deadline):
    # each worker owns a contiguous run of the deletion order and a private
    # forest with every earlier edge already gone; the cuts it processes
    # separate disjoint cell sets, so workers never write the same cell
    m = len(order)
    bounds = np.linspace(0, m, min(n_jobs, max(m, 1)) + 1).astype(np.int64)

    def work(lo, hi):
        f = forest.copy()
        _skip_removals(f.start, f.nbr, f.live, f.tree.u, f.tree.v, order, 0, lo)
        f._drain(order, lo, hi, values, deadline)
        return f._state.copy()

    with ThreadPoolExecutor(max_workers=len(bounds) - 1) as pool:
        futures = [pool.submit(work, lo, hi) for lo, hi in zip(bounds[:-1], bounds[1:])]
        return [fut.result() for fut in futures]


def appd_algo4(graph, problem="minimax", *, parallel=False, n_jobs=None, deadline=None):
    """All-pairs path distance matrix by calculate-and-copy over a spanning tree.

    Parameters
    ----------
    graph : DenseGraph or array-like of shape (n, n)
    problem : {"minimax", "widest"}
        ``"minimax"`` builds a minimum spanning tree and deletes its edges
        heaviest first; ``"widest"`` builds a maximum spanning tree and
        deletes lightest first.
    parallel : bool, default=False
        Split the deletion order across ``n_jobs`` threads. The output is
        bit-identical to the sequential run.
    n_jobs : int, optional
        Worker count for ``parallel=True``; defaults to ``os.cpu_count()``.
    deadline : float, optional
        ``time.perf_counter()`` value; the run raises ``DeadlineExceeded``
        once it is passed. Polled every 256 edge deletions.

    Returns
    -------
    DistanceMatrix
    """
    graph, problem, tree, order = _prepare(graph, problem, deadline)
    values = np.zeros((graph.n, graph.n))
    forest = Forest(tree)
    if parallel:
        _parallel_fill(forest, order, values, n_jobs or os.cpu_count() or 1, deadline)
    else:
        forest._drain(order, 0, len(order), values, deadline)
    return DistanceMatrix(values, problem, copy=False)


def appd_algo4_instrumented(graph, problem="minimax"):
    """Run :func:`appd_algo4` and also report its work counters.

    Returns
    -------
    dist : DistanceMatrix
    write_count : int
        Number of vertex pairs assigned a distance (each assignment stores
        both symmetric cells).
    traversal_cost : int
        Vertices visited by all component traversals together.
    """
    graph, problem, tree, order = _prepare(graph, problem, None)
    # NaN marks cells no cut has reached yet
    values = np.full((graph.n, graph.n), np.nan)
    np.fill_diagonal(values, 0.0)
    forest = Forest(tree)
    forest._drain(order, 0, len(order), values, None)
    _, writes, visited = (int(x) for x in forest._state)
    return DistanceMatrix(values, problem, copy=False), writes, visited
