"""Array-scan Prim for minimum and maximum spanning trees of dense graphs."""

import math
from enum import Enum
from functools import cached_property
from typing import NamedTuple

import numpy as np
from numba import njit

from ._deadline import check_deadline
from .graph import DenseGraph

__all__ = ["Sense", "SpanningTree", "TreeEdge", "prim_spanning_tree"]

# Prim steps between two deadline polls
_CHUNK = 1024


class Sense(str, Enum):
    MINIMUM = "minimum"
    MAXIMUM = "maximum"


class TreeEdge(NamedTuple):
    u: int
    v: int
    weight: float
    seq: int


class SpanningTree:
    """Spanning tree of a dense graph, kept as parallel edge arrays.

    Edge ``k`` is the ``k``-th edge Prim added: it joins ``u[k]`` (already in
    the tree) to ``v[k]``, and ``weight[k]`` is the original graph weight.
    """

    def __init__(self, n, u, v, weight, sense=Sense.MINIMUM):
        self.n = int(n)
        self.sense = Sense(sense)
        self.u = np.asarray(u, dtype=np.int64)
        self.v = np.asarray(v, dtype=np.int64)
        self.weight = np.asarray(weight, dtype=np.float64)
        for a in (self.u, self.v, self.weight):
            a.setflags(write=False)
        if not (len(self.u) == len(self.v) == len(self.weight) == max(self.n - 1, 0)):
            raise ValueError(f"a spanning tree on {n} vertices has {max(n - 1, 0)} edges")

    @cached_property
    def edges(self):
        return tuple(
            TreeEdge(u, v, w, k)
            for k, (u, v, w) in enumerate(
                zip(self.u.tolist(), self.v.tolist(), self.weight.tolist())
            )
        )

    @cached_property
    def adjacency(self):
        """Per-vertex tuple of incident edge indices (``seq`` values)."""
        adj = [[] for _ in range(self.n)]
        for k, (u, v) in enumerate(zip(self.u.tolist(), self.v.tolist())):
            adj[u].append(k)
            adj[v].append(k)
        return tuple(tuple(a) for a in adj)

    @property
    def total_weight(self):
        return math.fsum(self.weight.tolist())

    def __len__(self):
        return len(self.weight)

    def __repr__(self):
        return f"SpanningTree(n={self.n}, sense={self.sense.value!r})"


@njit(cache=True, nogil=True)
def _prim_steps(W, sign, key, parent, in_tree, eu, ev, first, last):
    n = W.shape[0]
    for s in range(first, last):
        # lowest key outside the tree; strict < keeps the smallest vertex id on ties
        v = -1
        best = 0.0
        for j in range(n):
            if not in_tree[j] and (v < 0 or key[j] < best):
                best = key[j]
                v = j
        eu[s] = parent[v]
        ev[s] = v
        in_tree[v] = True
        for j in range(n):
            if not in_tree[j]:
                w = sign * W[v, j]
                if w < key[j]:
                    key[j] = w
                    parent[j] = v


def prim_spanning_tree(graph, sense="minimum", *, deadline=None):
    """O(n^2) Prim's algorithm starting from vertex 0.

    A maximum spanning tree is grown as the minimum tree of the negated
    weights; negation happens on the fly, so no weight copy is made.

    Parameters
    ----------
    graph : DenseGraph
    sense : {"minimum", "maximum"}
    deadline : float, optional
        ``time.perf_counter()`` value after which the build aborts with
        :class:`DeadlineExceeded`. Polled every 1024 added vertices.
    """
    if not isinstance(graph, DenseGraph):
        graph = DenseGraph(graph)
    sense = Sense(sense)
    W = graph.weights
    n = graph.n
    eu = np.empty(max(n - 1, 0), dtype=np.int64)
    ev = np.empty_like(eu)
    if n > 1:
        sign = -1.0 if sense is Sense.MAXIMUM else 1.0
        key = sign * W[0]
        parent = np.zeros(n, dtype=np.int64)
        in_tree = np.zeros(n, dtype=np.bool_)
        in_tree[0] = True
        for first in range(0, n - 1, _CHUNK):
            check_deadline(deadline)
            _prim_steps(
                W, sign, key, parent, in_tree, eu, ev, first, min(first + _CHUNK, n - 1)
            )
    return SpanningTree(n, eu, ev, W[eu, ev], sense)
