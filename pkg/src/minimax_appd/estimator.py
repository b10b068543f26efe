"""scikit-learn style front end for path distance matrices."""

from sklearn.base import BaseEstimator, TransformerMixin

from ._validation import check_problem
from .bench import ALGORITHMS
from .graph import DenseGraph, PointSet, complete_graph_from_points


class MinimaxPathDistance(TransformerMixin, BaseEstimator):
    """All-pairs minimax (or widest) path distances of a point set or graph.

    The distance between two samples is the smallest achievable largest edge
    over all paths joining them in the complete graph (``problem="minimax"``),
    or the largest achievable smallest edge (``problem="widest"``).

    Like :class:`sklearn.manifold.TSNE`, the estimator is transductive: use
    :meth:`fit_transform`, or :meth:`fit` and read ``dist_matrix_``.

    Parameters
    ----------
    problem : {"minimax", "widest"}, default="minimax"
    algorithm : {"algo4", "floyd", "mst-path"}, default="algo4"
        ``"algo4"`` is the O(n^2) spanning-tree calculate-and-copy method;
        the others are O(n^3) / tree-walk references.
    metric : {"euclidean", "precomputed"} or callable, default="euclidean"
        With ``"precomputed"``, ``X`` is a symmetric edge-weight matrix.
    parallel : bool, default=False
        Threaded fill, ``algorithm="algo4"`` only.
    n_jobs : int, optional
        Thread count for ``parallel=True``.

    Attributes
    ----------
    dist_matrix_ : ndarray of shape (n_samples, n_samples)
    graph_ : DenseGraph
    n_features_in_ : int
        Only set for point input.

    Examples
    --------
    >>> from minimax_appd import MinimaxPathDistance
    >>> X = [[0.0], [1.0], [3.0]]
    >>> MinimaxPathDistance().fit_transform(X)[0, 2]
    2.0
    """

    def __init__(
        self,
        problem="minimax",
        algorithm="algo4",
        metric="euclidean",
        parallel=False,
        n_jobs=None,
    ):
        self.problem = problem
        self.algorithm = algorithm
        self.metric = metric
        self.parallel = parallel
        self.n_jobs = n_jobs

    def _graph(self, X):
        if isinstance(X, DenseGraph):
            return X
        if self.metric == "precomputed":
            return DenseGraph(X)
        points = PointSet(X)
        self.n_features_in_ = points.d
        return complete_graph_from_points(points, self.metric)

    def fit(self, X, y=None):
        problem = check_problem(self.problem)
        try:
            fn = ALGORITHMS[self.algorithm]
        except KeyError:
            raise ValueError(
                f"algorithm must be one of {sorted(ALGORITHMS)}; got {self.algorithm!r}"
            ) from None
        kwargs = {}
        if self.parallel:
            if self.algorithm != "algo4":
                raise ValueError("parallel=True is only supported with algorithm='algo4'")
            kwargs = {"parallel": True, "n_jobs": self.n_jobs}
        self.graph_ = self._graph(X)
        self.dist_matrix_ = fn(self.graph_, problem, **kwargs).values
        return self

    def fit_transform(self, X, y=None):
        return self.fit(X, y).dist_matrix_.copy()
