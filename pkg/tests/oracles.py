"""Slow, obviously-correct reference computations used only by the tests.

Nothing here imports the package's algorithms, so a bug in the library
cannot leak into its own expected values.
"""

import itertools
import math

MASK64 = (1 << 64) - 1


def pairwise_euclidean(points):
    """Double loop over point pairs."""
    n = len(points)
    out = [[0.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j:
                s = 0.0
                for a, b in zip(points[i], points[j]):
                    s += (a - b) * (a - b)
                out[i][j] = math.sqrt(s)
    return out


def floyd_minimax(W, widest=False, inner="ij"):
    """Textbook Floyd-Warshall with the intermediate vertex outermost.

    ``inner`` picks the order of the two inner loops.
    """
    n = len(W)
    D = [list(row) for row in W]
    better = (lambda a, b: a > b) if widest else (lambda a, b: a < b)
    join = min if widest else max
    for k in range(n):
        pairs = (
            ((i, j) for i in range(n) for j in range(n))
            if inner == "ij"
            else ((i, j) for j in range(n) for i in range(n))
        )
        for i, j in pairs:
            if i == j:
                continue
            cand = join(D[i][k], D[k][j])
            if better(cand, D[i][j]):
                D[i][j] = cand
    for i in range(n):
        D[i][i] = 0.0
    return D


def prufer_trees(n):
    """Yield every labelled tree on ``n`` vertices as a sorted edge tuple."""
    if n == 1:
        yield ()
        return
    if n == 2:
        yield ((0, 1),)
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        degree = [1] * n
        for x in seq:
            degree[x] += 1
        edges = []
        for x in seq:
            leaf = min(v for v in range(n) if degree[v] == 1)
            edges.append((min(leaf, x), max(leaf, x)))
            degree[leaf] -= 1
            degree[x] -= 1
        u, v = (v for v in range(n) if degree[v] == 1)
        edges.append((u, v))
        yield tuple(sorted(edges))


def optimal_spanning_trees(W, maximum=False):
    """Best total weight over all spanning trees and the trees achieving it."""
    n = len(W)
    best = None
    winners = []
    for tree in prufer_trees(n):
        total = math.fsum(W[u][v] for u, v in tree)
        if best is None or (total > best if maximum else total < best):
            best = total
            winners = [tree]
        elif total == best:
            winners.append(tree)
    return best, winners


def splitmix64_reference(seed, count):
    state = seed & MASK64
    out = []
    for _ in range(count):
        state = (state + 0x9E3779B97F4A7C15) & MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        out.append(z ^ (z >> 31))
    return out


def fnv1a64_reference(data):
    h = 0xCBF29CE484222325
    for b in data:
        h = ((h ^ b) * 0x100000001B3) & MASK64
    return h


def tree_path_extreme(n, edges, i, j, widest=False):
    """Largest (or smallest) weight on the tree path i -> j, found by DFS."""
    adj = {v: [] for v in range(n)}
    for u, v, w in edges:
        adj[u].append((v, w))
        adj[v].append((u, w))
    stack = [(i, -1, None)]
    while stack:
        x, parent, ext = stack.pop()
        if x == j:
            return ext
        for y, w in adj[x]:
            if y != parent:
                if ext is None:
                    nxt = w
                else:
                    nxt = min(ext, w) if widest else max(ext, w)
                stack.append((y, x, nxt))
    raise ValueError("vertices not connected")
