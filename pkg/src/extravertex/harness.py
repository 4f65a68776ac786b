"""Timing comparison of classifiers and a differential fuzzer.

Benchmark protocol: for each trial and polygon size, generate one polygon and
a point sequence, time ``reps`` blocks of ``points_per_rep`` classification
calls per algorithm, and record the mean per-call time in nanoseconds. All
algorithms see the same polygon and points within a trial.
"""
from __future__ import annotations

import csv
import json
import random
import time
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .classify import CLASSIFIERS, AlgorithmId, Classification, classify_half_plane_oracle
from .errors import ClockUnavailable, EmptyInput
from .geometry import DEFAULT_TOL, Orientation, Point, Polygon, Tolerance
from .polygen import (
    GenConfig,
    gen_convex,
    gen_point_inside,
    gen_point_near_boundary,
    gen_point_on_edge,
    gen_point_outside,
)

RECORD_HEADER = ["trial", "n_vertices", "algorithm", "mean_time_ns"]
SUMMARY_HEADER = ["n_vertices", "algorithm", "grand_mean_ns", "ratio_vs_extra_vertex"]

DEFAULT_BENCH_ALGORITHMS = (AlgorithmId.EXTRA_VERTEX_APPEND, AlgorithmId.TRIANGULATION)


@dataclass
class BenchConfig:
    vertex_counts: list[int] = field(default_factory=lambda: [20, 180])
    trials: int = 20
    reps: int = 100
    algorithms: list[AlgorithmId] = field(default_factory=lambda: list(DEFAULT_BENCH_ALGORITHMS))
    seed: int = 0
    points_per_rep: int = 1

    def __post_init__(self):
        if self.trials < 1 or self.reps < 1 or self.points_per_rep < 1:
            raise ValueError("trials, reps and points_per_rep must be >= 1")
        if not self.vertex_counts or any(n < 3 for n in self.vertex_counts):
            raise ValueError("vertex counts must all be >= 3")
        if not self.algorithms:
            raise ValueError("no algorithms selected")


@dataclass(frozen=True)
class BenchRecord:
    trial: int
    n_vertices: int
    algorithm: AlgorithmId
    mean_time_ns: float


@dataclass(frozen=True)
class SummaryRow:
    n_vertices: int
    algorithm: AlgorithmId
    grand_mean_ns: float
    ratio_vs_extra_vertex: float  # nan when no extra-vertex run at this n


@dataclass(frozen=True)
class Divergence:
    polygon: Polygon
    point: Point
    expected: Classification
    got: Classification
    algorithm: AlgorithmId

    def to_json(self) -> dict:
        return {
            "polygon": [[v.x, v.y] for v in self.polygon.vertices],
            "point": [self.point.x, self.point.y],
            "expected": self.expected.value,
            "got": self.got.value,
            "algorithm": self.algorithm.value,
        }


def _check_clock():
    try:
        info = time.get_clock_info("perf_counter")
    except Exception as exc:  # pragma: no cover - platform specific
        raise ClockUnavailable(str(exc)) from exc
    if not info.monotonic:
        raise ClockUnavailable("perf_counter is not monotonic on this platform")


def bench_inputs(cfg: BenchConfig, trial: int, n: int) -> tuple[Polygon, list[Point]]:
    """Polygon and point sequence for one (trial, n) cell; half inside, half outside."""
    rng = random.Random(f"bench:{cfg.seed}:{trial}:{n}")
    poly = gen_convex(GenConfig(n=n, seed=rng.getrandbits(64)))
    pts = []
    for _ in range(cfg.reps * cfg.points_per_rep):
        gen = gen_point_inside if rng.random() < 0.5 else gen_point_outside
        pts.append(gen(poly, rng))
    return poly, pts


def _time_block(fn, poly, pts, tol, reps, per_rep) -> float:
    clock = time.perf_counter_ns
    total = 0
    sink = None
    for r in range(reps):
        chunk = pts[r * per_rep:(r + 1) * per_rep]
        t0 = clock()
        for p in chunk:
            sink = fn(poly, p, tol)
        total += clock() - t0
    assert sink is not None
    return max(total / (reps * per_rep), 1.0)


def run_benchmark(cfg: BenchConfig, tol: Tolerance = DEFAULT_TOL) -> list[BenchRecord]:
    _check_clock()
    fns = [(a, CLASSIFIERS[a]) for a in cfg.algorithms]

    # warm-up: one untimed rep block per algorithm and size
    for n in cfg.vertex_counts:
        poly, pts = bench_inputs(cfg, -1, n)
        for _, fn in fns:
            _time_block(fn, poly, pts, tol, cfg.reps, cfg.points_per_rep)

    records = []
    for trial in range(cfg.trials):
        for n in cfg.vertex_counts:
            poly, pts = bench_inputs(cfg, trial, n)
            # rotate start so no algorithm always runs first
            k = trial % len(fns)
            times = {}
            for algo, fn in fns[k:] + fns[:k]:
                times[algo] = _time_block(fn, poly, pts, tol, cfg.reps, cfg.points_per_rep)
            for algo, _ in fns:
                records.append(BenchRecord(trial, n, algo, times[algo]))
    return records


def _reference(algos: Iterable[AlgorithmId]) -> AlgorithmId | None:
    for ref in (AlgorithmId.EXTRA_VERTEX_APPEND, AlgorithmId.EXTRA_VERTEX_BEST_EDGE):
        if ref in algos:
            return ref
    return None


def summarize(records: Sequence[BenchRecord]) -> list[SummaryRow]:
    """Grand mean per (n, algorithm) and its ratio to the extra-vertex mean.

    The reference is the append variant when present, else best-edge.
    """
    if not records:
        raise EmptyInput("no benchmark records")
    cells = defaultdict(list)
    for r in records:
        cells[(r.n_vertices, r.algorithm)].append(r.mean_time_ns)
    means = {k: sum(v) / len(v) for k, v in cells.items()}
    order = {a: i for i, a in enumerate(AlgorithmId)}
    rows = []
    for n in sorted({k[0] for k in means}):
        algos = sorted((a for (m, a) in means if m == n), key=order.get)
        ref = _reference(algos)
        for a in algos:
            ratio = means[(n, a)] / means[(n, ref)] if ref else float("nan")
            rows.append(SummaryRow(n, a, means[(n, a)], ratio))
    return rows


def write_records_csv(records: Sequence[BenchRecord], path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(RECORD_HEADER)
        for r in records:
            w.writerow([r.trial, r.n_vertices, r.algorithm.value, f"{r.mean_time_ns:.3f}"])


def read_records_csv(path) -> list[BenchRecord]:
    with open(path, newline="") as fh:
        return [BenchRecord(int(row["trial"]), int(row["n_vertices"]),
                            AlgorithmId(row["algorithm"]), float(row["mean_time_ns"]))
                for row in csv.DictReader(fh)]


def write_summary_csv(rows: Sequence[SummaryRow], path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(SUMMARY_HEADER)
        for r in rows:
            w.writerow([r.n_vertices, r.algorithm.value,
                        f"{r.grand_mean_ns:.3f}", f"{r.ratio_vs_extra_vertex:.4f}"])


# "near-boundary" stresses the tolerance band; its labels are not ground truth
FUZZ_MODES = ("mixed", "inside", "outside", "edge", "near-boundary")


def fuzz_case(seed: int, i: int, mode: str = "mixed") -> tuple[Polygon, Point]:
    """Deterministic (polygon, point) for iteration ``i``."""
    rng = random.Random(f"fuzz:{seed}:{i}")
    n = rng.randint(3, 64)
    orient = rng.choice((Orientation.CLOCKWISE, Orientation.COUNTER_CLOCKWISE))
    poly = gen_convex(GenConfig(n=n, seed=rng.getrandbits(64), orientation=orient))
    kind = rng.choice(("inside", "outside", "edge")) if mode == "mixed" else mode
    if kind == "inside":
        p = gen_point_inside(poly, rng)
    elif kind == "outside":
        p = gen_point_outside(poly, rng)
    elif kind == "near-boundary":
        p = gen_point_near_boundary(poly, rng)
    else:
        p = gen_point_on_edge(poly, rng)
    return poly, p


def differential_fuzz(seed: int, iterations: int, algorithms: Sequence[AlgorithmId],
                      mode: str = "mixed", tol: Tolerance = DEFAULT_TOL) -> list[Divergence]:
    """Compare each algorithm with the half-plane oracle on generated cases.

    Returns divergences in iteration order, then algorithm order.
    """
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    if mode not in FUZZ_MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {FUZZ_MODES}")
    out = []
    for i in range(iterations):
        poly, p = fuzz_case(seed, i, mode)
        expected = classify_half_plane_oracle(poly, p, tol)
        for algo in algorithms:
            got = CLASSIFIERS[algo](poly, p, tol)
            if got is not expected:
                out.append(Divergence(poly, p, expected, got, algo))
    return out


def write_divergences_json(divs: Sequence[Divergence], path) -> None:
    with open(path, "w") as fh:
        json.dump([d.to_json() for d in divs], fh, indent=2)
        fh.write("\n")
