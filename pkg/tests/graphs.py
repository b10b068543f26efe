"""Seeded graph families shared by the test modules."""

import numpy as np

from minimax_appd import DenseGraph, complete_graph_from_points, generate_random_points


def point_graph(n, seed, d=2):
    return complete_graph_from_points(generate_random_points(n, d, seed))


def grid_graph(n, seed, cells=4):
    """Points snapped to an integer grid: many tied (and some zero) weights."""
    coords = np.floor(generate_random_points(n, 2, seed).coords * cells)
    return complete_graph_from_points(coords)


def integer_graph(n, seed, low=-3, high=3):
    """Symmetric integer weights in [low, high], negatives and ties included."""
    rng = np.random.default_rng(seed)
    W = rng.integers(low, high + 1, size=(n, n)).astype(float)
    W = np.triu(W, 1)
    return DenseGraph(W + W.T)
