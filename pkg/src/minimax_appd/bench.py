"""Wall-clock benchmark harness for the path distance algorithms.

Each cell of the benchmark is one (algorithm, n) pair run on a seeded
synthetic point set. Only the distance computation is timed; building the
graph and checksumming the result happen outside the timer. A run that does
not finish within ``timeout_seconds`` is recorded as a timeout, and larger
sizes of the same algorithm are not attempted.
"""

import csv
import logging
import time
from dataclasses import dataclass, field

import numpy as np
from numba import njit

from ._deadline import DeadlineExceeded
from ._validation import check_problem
from .algo4 import appd_algo4
from .baselines import appd_floyd, appd_mst_path
from .graph import PointSet, complete_graph_from_points

__all__ = [
    "ALGORITHMS",
    "DEFAULT_SIZES",
    "BenchConfig",
    "BenchReport",
    "BenchRow",
    "ChecksumMismatch",
    "ScalingFit",
    "estimate_scaling_exponent",
    "generate_random_points",
    "matrix_checksum",
    "run_benchmark",
    "splitmix64",
]

logger = logging.getLogger(__name__)

ALGORITHMS = {
    "algo4": appd_algo4,
    "floyd": appd_floyd,
    "mst-path": appd_mst_path,
}

DEFAULT_SIZES = (500, 1000, 2000, 4000, 8000, 10000)

REPORT_COLUMNS = ("algorithm", "problem", "n", "seed", "status", "wall_seconds", "checksum_hex")
SUMMARY_COLUMNS = ("algorithm", "fit_min_n", "fit_max_n", "exponent")

_MASK64 = (1 << 64) - 1


# -- reproducible inputs ------------------------------------------------------


def splitmix64(seed, count):
    """First ``count`` outputs of the splitmix64 generator started at ``seed``.

    Output ``k`` (0-based) mixes the state ``seed + (k + 1) * 0x9E3779B97F4A7C15``
    modulo 2**64, so the stream is computed without a sequential loop.
    """
    k = np.arange(1, count + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = np.uint64(seed & _MASK64) + k * np.uint64(0x9E3779B97F4A7C15)
        z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
        return z ^ (z >> np.uint64(31))


def generate_random_points(n, d=2, seed=0):
    """``n`` points uniform in ``[0, 1)^d``, row-major from one splitmix64 stream.

    Each coordinate is the top 53 bits of one 64-bit output times 2**-53.
    """
    if n < 1 or d < 1:
        raise ValueError(f"need n >= 1 and d >= 1; got n={n}, d={d}")
    bits = splitmix64(seed, n * d) >> np.uint64(11)
    return PointSet((bits.astype(np.float64) * 2.0**-53).reshape(n, d), copy=False)


@njit(cache=True)
def _fnv1a64(data):
    h = np.uint64(0xCBF29CE484222325)
    prime = np.uint64(0x100000001B3)
    for i in range(data.shape[0]):
        h = (h ^ np.uint64(data[i])) * prime
    return h


def fnv1a64(data):
    return int(_fnv1a64(np.frombuffer(bytes(data), dtype=np.uint8)))


def matrix_checksum(values):
    """64-bit FNV-1a over the little-endian float64 bytes of ``values``, row-major."""
    a = np.ascontiguousarray(values, dtype="<f8")
    return int(_fnv1a64(a.reshape(-1).view(np.uint8)))


# -- configuration and report -------------------------------------------------


@dataclass(frozen=True)
class BenchConfig:
    sizes: tuple = DEFAULT_SIZES
    dimension: int = 2
    seed: int = 0
    algorithms: tuple = ("algo4", "floyd", "mst-path")
    problem: str = "minimax"
    timeout_seconds: float = 7200.0
    repetitions: int = 1

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(int(n) for n in self.sizes))
        object.__setattr__(self, "algorithms", tuple(self.algorithms))
        object.__setattr__(self, "problem", check_problem(self.problem).value)
        if not self.sizes:
            raise ValueError("at least one size is required")
        if any(n < 2 for n in self.sizes):
            raise ValueError(f"every size must be >= 2; got {list(self.sizes)}")
        if any(a >= b for a, b in zip(self.sizes, self.sizes[1:])):
            raise ValueError(f"sizes must be strictly increasing; got {list(self.sizes)}")
        if not self.algorithms:
            raise ValueError("at least one algorithm is required")
        if len(set(self.algorithms)) != len(self.algorithms):
            raise ValueError(f"duplicate algorithm in {list(self.algorithms)}")
        if not self.timeout_seconds > 0:
            raise ValueError(f"timeout must be positive; got {self.timeout_seconds}")
        if self.dimension < 1:
            raise ValueError(f"dimension must be >= 1; got {self.dimension}")
        if self.repetitions < 1:
            raise ValueError(f"repetitions must be >= 1; got {self.repetitions}")


@dataclass(frozen=True)
class BenchRow:
    algorithm: str
    problem: str
    n: int
    seed: int
    status: str  # "ok" | "timeout"
    wall_seconds: float | None = None
    checksum: int | None = None

    def __post_init__(self):
        if self.status == "ok":
            if self.wall_seconds is None or self.checksum is None:
                raise ValueError("a completed row needs wall_seconds and checksum")
        elif self.status == "timeout":
            if self.wall_seconds is not None:
                raise ValueError("a timeout row has no wall_seconds")
        else:
            raise ValueError(f"status must be 'ok' or 'timeout'; got {self.status!r}")

    @property
    def completed(self):
        return self.status == "ok"

    def as_record(self):
        return {
            "algorithm": self.algorithm,
            "problem": self.problem,
            "n": self.n,
            "seed": self.seed,
            "status": self.status,
            "wall_seconds": "" if self.wall_seconds is None else repr(self.wall_seconds),
            "checksum_hex": "" if self.checksum is None else f"{self.checksum:016x}",
        }


@dataclass(frozen=True)
class ScalingFit:
    algorithm: str
    fit_min_n: int
    fit_max_n: int
    exponent: float


@dataclass
class BenchReport:
    rows: list = field(default_factory=list)

    def completed(self, algorithm):
        return [r for r in self.rows if r.algorithm == algorithm and r.completed]

    @property
    def algorithms(self):
        return list(dict.fromkeys(r.algorithm for r in self.rows))

    def scaling_fits(self):
        """One :class:`ScalingFit` per algorithm with at least 3 completed rows."""
        fits = []
        for name in self.algorithms:
            done = self.completed(name)
            if len(done) >= 3:
                fits.append(
                    ScalingFit(
                        name,
                        min(r.n for r in done),
                        max(r.n for r in done),
                        estimate_scaling_exponent(self, name),
                    )
                )
        return fits

    def write_csv(self, path):
        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.DictWriter(fh, fieldnames=REPORT_COLUMNS)
            writer.writeheader()
            for row in self.rows:
                writer.writerow(row.as_record())

    def write_summary_csv(self, path):
        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(SUMMARY_COLUMNS)
            for fit in self.scaling_fits():
                writer.writerow((fit.algorithm, fit.fit_min_n, fit.fit_max_n, repr(fit.exponent)))

    @classmethod
    def read_csv(cls, path):
        rows = []
        with open(path, newline="", encoding="utf-8") as fh:
            for rec in csv.DictReader(fh):
                rows.append(
                    BenchRow(
                        algorithm=rec["algorithm"],
                        problem=rec["problem"],
                        n=int(rec["n"]),
                        seed=int(rec["seed"]),
                        status=rec["status"],
                        wall_seconds=float(rec["wall_seconds"]) if rec["wall_seconds"] else None,
                        checksum=int(rec["checksum_hex"], 16) if rec["checksum_hex"] else None,
                    )
                )
        return cls(rows)


def estimate_scaling_exponent(report, algorithm):
    """Least-squares slope of log(wall_seconds) against log(n)."""
    done = report.completed(algorithm)
    if len(done) < 3:
        raise ValueError(
            f"need at least 3 completed rows to fit {algorithm!r}; have {len(done)}"
        )
    x = np.log([r.n for r in done])
    y = np.log([r.wall_seconds for r in done])
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)


# -- harness ------------------------------------------------------------------


class ChecksumMismatch(RuntimeError):
    """Two algorithms produced different matrices for the same benchmark cell."""


def _time_once(fn, graph, problem, timeout):
    start = time.perf_counter()
    try:
        result = fn(graph, problem, deadline=start + timeout)
    except DeadlineExceeded:
        return None, None
    wall = time.perf_counter() - start
    if wall > timeout:
        return None, None
    return wall, result


def run_benchmark(config, algorithms=None, *, graph_factory=None):
    """Run every (algorithm, size) cell of ``config`` and collect a report.

    Parameters
    ----------
    config : BenchConfig
    algorithms : mapping, optional
        Extra or replacement implementations keyed by name. Each is called
        as ``fn(graph, problem, deadline=...)`` and returns a DistanceMatrix.
    graph_factory : callable, optional
        ``graph_factory(n, dimension, seed)`` returning a DenseGraph; the
        default is the complete Euclidean graph of
        :func:`generate_random_points`.

    Raises
    ------
    ChecksumMismatch
        If two algorithms complete the same cell with different matrices.
    """
    registry = dict(ALGORITHMS)
    registry.update(algorithms or {})
    unknown = [a for a in config.algorithms if a not in registry]
    if unknown:
        raise ValueError(f"unknown algorithm(s) {unknown}; known: {sorted(registry)}")
    if graph_factory is None:
        def graph_factory(n, d, seed):
            return complete_graph_from_points(generate_random_points(n, d, seed))

    # compile every kernel before the first timed call
    warm = graph_factory(3, config.dimension, config.seed)
    for name in config.algorithms:
        registry[name](warm, config.problem)

    report = BenchReport()
    gave_up = set()
    for n in config.sizes:
        graph = graph_factory(n, config.dimension, config.seed)
        checksums = {}
        for name in config.algorithms:
            row = dict(algorithm=name, problem=config.problem, n=n, seed=config.seed)
            if name in gave_up:
                report.rows.append(BenchRow(status="timeout", **row))
                logger.info("%s n=%d skipped after earlier timeout", name, n)
                continue
            best = None
            result = None
            for _ in range(config.repetitions):
                wall, result = _time_once(registry[name], graph, config.problem, config.timeout_seconds)
                if wall is None:
                    best = None
                    break
                best = wall if best is None else min(best, wall)
            if best is None:
                gave_up.add(name)
                report.rows.append(BenchRow(status="timeout", **row))
                logger.info("%s n=%d timeout after %gs", name, n, config.timeout_seconds)
                continue
            checksum = matrix_checksum(result.values)
            del result
            checksums[name] = checksum
            report.rows.append(BenchRow(status="ok", wall_seconds=best, checksum=checksum, **row))
            logger.info("%s n=%d %.6fs checksum=%016x", name, n, best, checksum)
        if len(set(checksums.values())) > 1:
            detail = ", ".join(f"{k}={v:016x}" for k, v in checksums.items())
            raise ChecksumMismatch(f"n={n}, seed={config.seed}: {detail}")
        del graph
    return report


def format_fits(fits):
    lines = [f"{'algorithm':<10} {'fit_min_n':>9} {'fit_max_n':>9} {'exponent':>8}"]
    for f in fits:
        lines.append(f"{f.algorithm:<10} {f.fit_min_n:>9} {f.fit_max_n:>9} {f.exponent:>8.3f}")
    return "\n".join(lines)

