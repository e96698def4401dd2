"""Baseline and hybrid solvers, a uniform dispatcher, and file-level verification."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal, Sequence

from .analysis import estimate_k, forbidden_coloring
from .cliquesolve import Retry, clique_solve
from .colorsolve import Coloring, color_solve
from .core import (
    ComparisonGraph,
    Edge,
    GroundTruth,
    OrientationStore,
    ProbeOracle,
    edge_key,
    is_acyclic,
    validate_orientation,
)

Algo = Literal["colorsolve", "cliquesolve", "brute", "hybrid"]
ALGOS = ("colorsolve", "cliquesolve", "brute", "hybrid")


def brute_force_solve(oracle: ProbeOracle, g: ComparisonGraph) -> OrientationStore:
    """Probe every edge once."""
    store = OrientationStore()
    for u, v in g.sorted_edges():
        if oracle.probe(u, v):
            store.record(u, v)
        else:
            store.record(v, u)
    return store


def density(g: ComparisonGraph) -> float:
    pairs = g.n * (g.n - 1) // 2
    return g.m / pairs if pairs else 0.0


def sparse_threshold(n: int, scale: float = 1.0) -> float:
    """Edge density below which probing everything is cheaper: ``scale * ln(n) / sqrt(n)``."""
    if n < 2:
        return math.inf
    return scale * math.log(n) / math.sqrt(n)


def hybrid_branch(g: ComparisonGraph, p_hint: float | None = None, threshold_scale: float = 1.0) -> str:
    p = density(g) if p_hint is None else p_hint
    return "brute" if p < sparse_threshold(g.n, threshold_scale) else "cliquesolve"


def hybrid_solve(
    oracle: ProbeOracle,
    g: ComparisonGraph,
    p_hint: float | None = None,
    threshold_scale: float = 1.0,
) -> OrientationStore:
    return solve("hybrid", oracle, g, p_hint=p_hint, threshold_scale=threshold_scale).store


@dataclass
class SolveOutcome:
    store: OrientationStore
    algo: str
    branch: str
    k_used: int | None = None
    retries: list[Retry] = field(default_factory=list)


def solve(
    algo: str,
    oracle: ProbeOracle,
    g: ComparisonGraph,
    *,
    k: int | None = None,
    coloring: Coloring | None = None,
    p_hint: float | None = None,
    threshold_scale: float = 1.0,
) -> SolveOutcome:
    """Run one algorithm with defaults filled in for any missing parameter.

    ``k_used`` is the color count for colorsolve, and for cliquesolve the
    largest k any vertex ended up needing.
    """
    if algo not in ALGOS:
        raise ValueError(f"unknown algorithm {algo!r}")
    branch = hybrid_branch(g, p_hint, threshold_scale) if algo == "hybrid" else algo
    if branch == "brute":
        return SolveOutcome(brute_force_solve(oracle, g), algo, branch)
    if branch == "colorsolve":
        c = coloring if coloring is not None else forbidden_coloring(g)
        return SolveOutcome(color_solve(oracle, g, c), algo, branch, c.k)

    k0 = k if k is not None else estimate_k(g).k
    k0 = max(k0, 2)
    retries: list[Retry] = []

    def keep_retries(rec: object) -> None:
        if isinstance(rec, Retry):
            retries.append(rec)

    store = clique_solve(oracle, g, k0, trace=keep_retries)
    k_used = max([k0] + [r.new_k for r in retries])
    return SolveOutcome(store, algo, branch, k_used, retries)


@dataclass
class VerifyReport:
    complete: bool
    acyclic: bool
    agreement: bool
    missing: list[Edge] = field(default_factory=list)
    extra: list[Edge] = field(default_factory=list)
    flipped: list[Edge] = field(default_factory=list)
    duplicates: list[Edge] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.complete and self.acyclic and self.agreement and not self.extra and not self.duplicates

    def lines(self) -> list[str]:
        out = [
            f"complete={str(self.complete).lower()}",
            f"acyclic={str(self.acyclic).lower()}",
            f"agreement={str(self.agreement).lower()}",
        ]
        for label, edges in (
            ("missing", self.missing),
            ("extra", self.extra),
            ("flipped", self.flipped),
            ("duplicate", self.duplicates),
        ):
            out.extend(f"{label} {u} {v}" for u, v in edges)
        return out


def verify(g: ComparisonGraph, order: Sequence[int], oriented: Sequence[Edge]) -> VerifyReport:
    """Check an orientation against the hidden order it should reproduce.

    ``flipped`` lists, as written in the file, each edge whose direction
    disagrees with ``order``.
    """
    truth = GroundTruth.from_order(g, order)
    store = OrientationStore()
    seen: set[Edge] = set()
    duplicates, extra, flipped = [], [], []
    for u, v in oriented:
        key = edge_key(u, v)
        if key in seen:
            duplicates.append((u, v))
            continue
        seen.add(key)
        if key not in g.edges:
            extra.append((u, v))
            continue
        store.directed[key] = u < v
        if not truth.precedes(u, v):
            flipped.append((u, v))
    report = validate_orientation(g, store)
    return VerifyReport(
        complete=report.complete,
        acyclic=is_acyclic(g.n, [e for e in oriented if 0 <= min(e) and max(e) < g.n]),
        agreement=report.complete and not flipped,
        missing=report.missing,
        extra=sorted(extra),
        flipped=sorted(flipped),
        duplicates=sorted(duplicates),
    )


def matches_truth(store: OrientationStore, truth: GroundTruth) -> bool:
    return store.directed_edges() == truth.directed_edges()
