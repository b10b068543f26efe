import numpy as np
import pytest
from sklearn.base import clone

from minimax_appd import DenseGraph, MinimaxPathDistance, appd_algo4, appd_floyd

from graphs import point_graph


def test_params_round_trip():
    est = MinimaxPathDistance(problem="widest", algorithm="floyd")
    params = est.get_params()
    assert params == {"problem": "widest", "algorithm": "floyd", "metric": "euclidean",
                      "parallel": False, "n_jobs": None}
    est.set_params(algorithm="mst-path")
    assert clone(est).get_params()["algorithm"] == "mst-path"


def test_doc_example():
    assert MinimaxPathDistance().fit_transform([[0.0], [1.0], [3.0]])[0, 2] == 2.0


@pytest.mark.parametrize("algorithm", ["algo4", "floyd", "mst-path"])
@pytest.mark.parametrize("problem", ["minimax", "widest"])
def test_euclidean_points(algorithm, problem):
    g = point_graph(30, 2)
    from minimax_appd import generate_random_points

    X = generate_random_points(30, 2, 2).coords
    D = MinimaxPathDistance(problem=problem, algorithm=algorithm).fit_transform(X)
    assert D.tobytes() == appd_algo4(g, problem).values.tobytes()


def test_precomputed_and_graph_input():
    g = point_graph(20, 4)
    est = MinimaxPathDistance(metric="precomputed").fit(g.weights)
    assert est.dist_matrix_.tobytes() == appd_floyd(g).values.tobytes()
    assert not hasattr(est, "n_features_in_")
    D = MinimaxPathDistance().fit_transform(g)
    assert D.tobytes() == est.dist_matrix_.tobytes()


def test_callable_metric():
    X = np.array([[0, 0], [1, 3], [5, 0]], dtype=float)
    manhattan = lambda A: np.abs(A[:, None] - A[None]).sum(-1)  # noqa: E731
    est = MinimaxPathDistance(metric=manhattan).fit(X)
    assert est.n_features_in_ == 2
    # 0-1 costs 4, 1-2 costs 7, 0-2 costs 5
    assert est.dist_matrix_[1, 2] == 5.0


def test_fit_transform_returns_copy():
    est = MinimaxPathDistance()
    D = est.fit_transform([[0.0], [2.0]])
    D[0, 1] = 99.0
    assert est.dist_matrix_[0, 1] == 2.0


def test_parallel():
    X = point_graph(200, 1).weights
    a = MinimaxPathDistance(metric="precomputed", parallel=True, n_jobs=3).fit_transform(X)
    b = MinimaxPathDistance(metric="precomputed").fit_transform(X)
    assert a.tobytes() == b.tobytes()


@pytest.mark.parametrize(
    "params, X",
    [
        ({"parallel": True, "algorithm": "floyd"}, [[0.0], [1.0]]),
        ({"algorithm": "dijkstra"}, [[0.0], [1.0]]),
        ({"problem": "shortest"}, [[0.0], [1.0]]),
        ({"metric": "precomputed"}, [[0.0, 1.0], [2.0, 0.0]]),
        ({}, [[0.0], [np.nan]]),
    ],
)
def test_invalid(params, X):
    with pytest.raises(ValueError):
        MinimaxPathDistance(**params).fit(X)


def test_dense_graph_passthrough():
    g = DenseGraph([[0, 5], [5, 0]])
    assert MinimaxPathDistance().fit(g).graph_ is g
