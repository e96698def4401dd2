"""Probe-count sweeps over generated instances, written as CSV."""

from __future__ import annotations

import csv
import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from itertools import product
from typing import IO, Iterable, Iterator, Sequence

from .core import validate_orientation
from .generators import InstanceSpec, make_instance
from .solvers import matches_truth, solve

log = logging.getLogger(__name__)

CSV_FIELDS = ("algo", "n", "p", "seed", "k_used", "probes", "edges", "correct", "wall_ms")


@dataclass
class BenchRecord:
    algo: str
    n: int
    p: float
    seed: int
    k_used: int | None
    probes: int
    edges: int
    correct: bool
    wall_ms: float


def build_grid(
    model: str,
    n_list: Sequence[int],
    p_list: Sequence[float],
    trials: int,
    algos: Sequence[str],
    base_seed: int = 0,
) -> list[tuple[InstanceSpec, str]]:
    """Cartesian grid in (n, p, seed, algo) order; trial ``t`` uses seed ``base_seed + t``."""
    return [
        (InstanceSpec(model, n, p, base_seed + t), algo)
        for n, p, t, algo in product(n_list, p_list, range(trials), algos)
    ]


def run_one(spec: InstanceSpec, algo: str) -> BenchRecord:
    g, oracle = make_instance(spec)
    start = time.perf_counter()
    k_used = None
    try:
        outcome = solve(algo, oracle, g)
        k_used = outcome.k_used
        correct = validate_orientation(g, outcome.store).ok and matches_truth(outcome.store, oracle.truth)
    except Exception:
        log.exception("trial failed: %s %s", algo, spec)
        correct = False
    wall_ms = (time.perf_counter() - start) * 1000.0
    return BenchRecord(algo, spec.n, spec.p, spec.seed, k_used, oracle.probe_count, g.m, correct, wall_ms)


def _run_pair(item: tuple[InstanceSpec, str]) -> BenchRecord:
    return run_one(*item)


def bench(grid: Iterable[tuple[InstanceSpec, str]], jobs: int = 1) -> Iterator[BenchRecord]:
    """Yield one record per grid entry, in grid order."""
    items = list(grid)
    if jobs <= 1:
        for item in items:
            yield _run_pair(item)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(_run_pair, items)


def write_csv(records: Iterable[BenchRecord], stream: IO[str]) -> int:
    writer = csv.DictWriter(stream, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    rows = 0
    for rec in records:
        row = asdict(rec)
        row["k_used"] = "" if rec.k_used is None else rec.k_used
        row["correct"] = str(rec.correct).lower()
        row["wall_ms"] = f"{rec.wall_ms:.3f}"
        writer.writerow(row)
        rows += 1
    return rows


def envelope_constant(rec: BenchRecord) -> float:
    """probes / (n^1.5 ln n)."""
    return rec.probes / (rec.n**1.5 * math.log(rec.n)) if rec.n > 1 else 0.0


def scaling_ratio(rec: BenchRecord) -> float:
    """probes / (n (log2 n)^2)."""
    return rec.probes / (rec.n * math.log2(rec.n) ** 2) if rec.n > 1 else 0.0


def summarize(records: Sequence[BenchRecord]) -> list[str]:
    """One line per (algo, n, p) group with mean probes and fitted constants."""
    groups: dict[tuple[str, int, float], list[BenchRecord]] = {}
    for rec in records:
        groups.setdefault((rec.algo, rec.n, rec.p), []).append(rec)
    lines = []
    for (algo, n, p), recs in groups.items():
        mean = sum(r.probes for r in recs) / len(recs)
        lines.append(
            f"algo={algo} n={n} p={p} trials={len(recs)} mean_probes={mean:.1f} "
            f"max_C_n1.5lnn={max(map(envelope_constant, recs)):.4f} "
            f"mean_ratio_nlog2sq={sum(map(scaling_ratio, recs)) / len(recs):.4f} "
            f"correct={sum(r.correct for r in recs)}/{len(recs)}"
        )
    return lines
