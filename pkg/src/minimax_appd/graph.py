"""Dense graph data model, point-set ingestion and CSV input/output."""

import csv
import io
import math
from pathlib import Path

import numpy as np
from numba import njit

from ._validation import (
    InvalidGraphError,
    Problem,
    check_points,
    check_problem,
    check_weight_matrix,
)

__all__ = [
    "CSVFormatError",
    "DenseGraph",
    "DistanceMatrix",
    "PointSet",
    "complete_graph_from_points",
    "format_matrix_csv",
    "load_graph",
    "read_matrix_csv",
    "write_matrix_csv",
]


class CSVFormatError(InvalidGraphError):
    """A CSV file could not be parsed (ragged rows, non-numeric cells, ...)."""


def _frozen(a, copy):
    a = np.array(a, dtype=np.float64, order="C", copy=True) if copy else a
    a.setflags(write=False)
    return a


class PointSet:
    """``n`` points in ``d`` dimensions with finite coordinates."""

    __slots__ = ("coords",)

    def __init__(self, coords, *, copy=True):
        coords = check_points(coords)
        self.coords = _frozen(coords, copy)

    @property
    def n(self):
        return self.coords.shape[0]

    @property
    def d(self):
        return self.coords.shape[1]

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"PointSet(n={self.n}, d={self.d})"


class DenseGraph:
    """Complete undirected graph stored as a symmetric ``n x n`` weight matrix.

    Parameters
    ----------
    weights : array-like of shape (n, n)
        Finite edge weights. Must be exactly symmetric with an exactly zero
        diagonal; negative and repeated weights are allowed.
    copy : bool, default=True
        Copy ``weights`` before freezing it. Pass ``False`` only for arrays
        nobody else holds a reference to.
    """

    __slots__ = ("weights",)

    def __init__(self, weights, *, copy=True):
        weights = check_weight_matrix(weights)
        self.weights = _frozen(weights, copy)

    @property
    def n(self):
        return self.weights.shape[0]

    def negated(self):
        return DenseGraph(-self.weights, copy=False)

    def permuted(self, perm):
        """Relabel vertices so that new vertex ``k`` is old vertex ``perm[k]``."""
        perm = np.asarray(perm)
        return DenseGraph(self.weights[np.ix_(perm, perm)], copy=False)

    def __repr__(self):
        return f"DenseGraph(n={self.n})"


class DistanceMatrix:
    """All-pairs path distance matrix in the minimax or widest sense."""

    __slots__ = ("values", "problem")

    def __init__(self, values, problem=Problem.MINIMAX, *, copy=True):
        values = np.asarray(values, dtype=np.float64)
        if values.ndim != 2 or values.shape[0] != values.shape[1]:
            raise ValueError(f"distance matrix must be square; got {values.shape}")
        self.values = _frozen(np.ascontiguousarray(values), copy)
        self.problem = check_problem(problem)

    @property
    def n(self):
        return self.values.shape[0]

    def checksum(self):
        from .bench import matrix_checksum

        return matrix_checksum(self.values)

    def __eq__(self, other):
        if not isinstance(other, DistanceMatrix):
            return NotImplemented
        return (
            self.problem == other.problem
            and self.values.shape == other.values.shape
            and self.values.tobytes() == other.values.tobytes()
        )

    __hash__ = None

    def __repr__(self):
        return f"DistanceMatrix(n={self.n}, problem={self.problem.value!r})"


@njit(cache=True)
def _euclidean_matrix(X):
    n, d = X.shape
    out = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            s = 0.0
            for k in range(d):
                t = X[i, k] - X[j, k]
                s += t * t
            out[i, j] = math.sqrt(s)
            out[j, i] = out[i, j]
    return out


_METRICS = {"euclidean": _euclidean_matrix}


def complete_graph_from_points(points, metric="euclidean"):
    """Build the complete graph whose edge weights are pairwise point distances.

    ``metric`` is ``"euclidean"`` or a callable mapping an ``(n, d)`` float
    array to an ``(n, n)`` weight matrix; the result is validated either way.
    """
    if not isinstance(points, PointSet):
        points = PointSet(points)
    if callable(metric):
        fn = metric
    else:
        try:
            fn = _METRICS[metric]
        except KeyError:
            raise ValueError(f"unknown metric {metric!r}") from None
    return DenseGraph(fn(points.coords), copy=False)


def _parse_rows(text, source):
    rows = []
    width = None
    for lineno, row in enumerate(csv.reader(io.StringIO(text)), start=1):
        if not row or all(not cell.strip() for cell in row):
            continue
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise CSVFormatError(
                f"{source}: ragged row {len(rows)} (line {lineno}): "
                f"expected {width} columns, got {len(row)}"
            )
        values = []
        for col, cell in enumerate(row):
            try:
                value = float(cell)
            except ValueError:
                raise CSVFormatError(
                    f"{source}: non-numeric value {cell!r} at row {len(rows)}, "
                    f"column {col}"
                ) from None
            if not math.isfinite(value):
                raise CSVFormatError(
                    f"{source}: non-finite value {cell.strip()!r} at row "
                    f"{len(rows)}, column {col}"
                )
            values.append(value)
        rows.append(values)
    if not rows:
        raise CSVFormatError(f"{source}: no data rows")
    return np.array(rows, dtype=np.float64)


def read_points_csv(path):
    path = Path(path)
    return PointSet(_parse_rows(path.read_text(encoding="utf-8"), path), copy=False)


def read_matrix_csv(path):
    path = Path(path)
    W = _parse_rows(path.read_text(encoding="utf-8"), path)
    try:
        return DenseGraph(W, copy=False)
    except InvalidGraphError as exc:
        raise InvalidGraphError(f"{path}: {exc}") from None


def load_graph(path, format="matrix"):
    """Load a :class:`DenseGraph` from ``points`` or ``matrix`` CSV."""
    fmt = format.removesuffix("-csv")
    if fmt == "points":
        return complete_graph_from_points(read_points_csv(path))
    if fmt == "matrix":
        return read_matrix_csv(path)
    raise ValueError(f"unknown format {format!r}; expected 'points' or 'matrix'")


def _shortest_repr(x):
    r = repr(float(x))
    return r[:-2] if r.endswith(".0") else r


def format_matrix_csv(values):
    """Render a matrix as CSV using the shortest round-trip form of each value."""
    values = np.asarray(values, dtype=np.float64)
    return "".join(",".join(map(_shortest_repr, row)) + "\n" for row in values.tolist())


def write_matrix_csv(values, file):
    """Write ``values`` (array or :class:`DistanceMatrix`) to a path or text stream."""
    if isinstance(values, DistanceMatrix):
        values = values.values
    text = format_matrix_csv(values)
    if hasattr(file, "write"):
        file.write(text)
    else:
        Path(file).write_text(text, encoding="utf-8")
