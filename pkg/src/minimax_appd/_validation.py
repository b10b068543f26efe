"""Input validation helpers shared by the graph model and the estimator."""

from enum import Enum

import numpy as np
from sklearn.utils.validation import check_array


class InvalidGraphError(ValueError):
    """Raised when points or an edge-weight matrix violate the dense-graph model."""


class Problem(str, Enum):
    MINIMAX = "minimax"
    WIDEST = "widest"


def check_problem(problem):
    try:
        return Problem(problem)
    except ValueError:
        choices = ", ".join(p.value for p in Problem)
        raise ValueError(f"problem must be one of {choices}; got {problem!r}") from None


def _first_nonfinite(a):
    bad = np.argwhere(~np.isfinite(a))
    return tuple(int(x) for x in bad[0]) if len(bad) else None


def check_points(X):
    """Return ``X`` as a C-contiguous float64 (n, d) array of finite values.

    Raises
    ------
    InvalidGraphError
        If the array is empty, not 2-D, or holds NaN/inf. The message names
        the first offending row and column.
    """
    try:
        X = check_array(
            X, dtype=np.float64, order="C", ensure_all_finite=False, copy=False
        )
    except ValueError as exc:
        raise InvalidGraphError(str(exc)) from None
    pos = _first_nonfinite(X)
    if pos is not None:
        raise InvalidGraphError(
            f"non-finite coordinate {X[pos]!r} at row {pos[0]}, column {pos[1]}"
        )
    return X


def check_weight_matrix(W):
    """Validate a dense undirected edge-weight matrix.

    The matrix must be square, finite, exactly symmetric and have an exactly
    zero diagonal. Nothing is repaired: a single asymmetric bit is an error.
    """
    try:
        W = check_array(
            W,
            dtype=np.float64,
            order="C",
            ensure_all_finite=False,
            ensure_min_samples=1,
            ensure_min_features=1,
        )
    except ValueError as exc:
        raise InvalidGraphError(str(exc)) from None
    if W.shape[0] != W.shape[1]:
        raise InvalidGraphError(f"weight matrix must be square; got shape {W.shape}")
    pos = _first_nonfinite(W)
    if pos is not None:
        raise InvalidGraphError(
            f"non-finite weight {W[pos]!r} at ({pos[0]}, {pos[1]})"
        )
    diag = np.flatnonzero(np.diagonal(W) != 0)
    if len(diag):
        i = int(diag[0])
        raise InvalidGraphError(f"nonzero diagonal entry {W[i, i]!r} at ({i}, {i})")
    # compare bit patterns so that 0.0 vs -0.0 also counts as asymmetric
    bits = W.view(np.uint64)
    asym = np.argwhere(np.triu(bits != bits.T))
    if len(asym):
        i, j = (int(x) for x in asym[0])
        raise InvalidGraphError(
            f"asymmetric weights at ({i}, {j}): {W[i, j]!r} != {W[j, i]!r}"
        )
    return W
