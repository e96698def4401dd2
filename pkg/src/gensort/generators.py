"""Random instance generators. Each returns the graph and an oracle over a hidden order."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Literal

import numpy as np

from .core import ComparisonGraph, GroundTruth, ProbeOracle

Model = Literal["er", "nutsbolts", "stochastic", "file"]
MODELS = ("er", "nutsbolts", "stochastic", "file")


class OddN(ValueError):
    pass


@dataclass(frozen=True)
class InstanceSpec:
    model: Model
    n: int
    p: float = 0.5
    seed: int = 0
    path: Path | None = None

    def __post_init__(self):
        if self.model not in MODELS:
            raise ValueError(f"unknown model {self.model!r}")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p must lie in [0, 1], got {self.p}")
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.model == "nutsbolts" and self.n % 2:
            raise OddN(f"nuts and bolts needs even n, got {self.n}")


def _instance(n: int, edges, order) -> tuple[ComparisonGraph, ProbeOracle]:
    g = ComparisonGraph(n, edges)
    return g, ProbeOracle(GroundTruth.from_order(g, [int(v) for v in order]))


def er_sample(n: int, p: float, seed: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Raw G(n, p) draw: edge endpoint arrays (u < v) and the hidden order."""
    rng = np.random.default_rng(seed)
    iu, iv = np.triu_indices(n, 1)
    keep = rng.random(iu.size) < p
    order = rng.permutation(n)
    return iu[keep], iv[keep], order


def gen_er(n: int, p: float, seed: int) -> tuple[ComparisonGraph, ProbeOracle]:
    """G(n, p) with a uniformly random hidden total order."""
    InstanceSpec("er", n, p, seed)
    us, vs, order = er_sample(n, p, seed)
    return _instance(n, zip(us.tolist(), vs.tolist()), order)


def gen_nuts_bolts(n: int, seed: int) -> tuple[ComparisonGraph, ProbeOracle]:
    """Complete bipartite G; hidden ranks alternate nut, bolt, nut, ..."""
    if n % 2:
        raise OddN(f"nuts and bolts needs even n, got {n}")
    rng = np.random.default_rng(seed)
    perm = rng.permutation(n).tolist()
    half = n // 2
    nuts, bolts = perm[:half], perm[half:]
    edges = [(min(a, b), max(a, b)) for a in nuts for b in bolts]
    order = [v for pair in zip(nuts, bolts) for v in pair]
    return _instance(n, edges, order)


def gen_stochastic(n: int, p: float, seed: int) -> tuple[ComparisonGraph, ProbeOracle]:
    """Hidden Hamiltonian path along the order, plus every other pair with probability p."""
    InstanceSpec("stochastic", n, p, seed)
    rng = np.random.default_rng(seed)
    order = rng.permutation(n)
    rank = np.empty(n, dtype=np.int64)
    rank[order] = np.arange(n)
    iu, iv = np.triu_indices(n, 1)
    keep = (rng.random(iu.size) < p) | (np.abs(rank[iu] - rank[iv]) == 1)
    return _instance(n, zip(iu[keep].tolist(), iv[keep].tolist()), order)


def make_instance(spec: InstanceSpec) -> tuple[ComparisonGraph, ProbeOracle]:
    if spec.model == "er":
        return gen_er(spec.n, spec.p, spec.seed)
    if spec.model == "nutsbolts":
        return gen_nuts_bolts(spec.n, spec.seed)
    if spec.model == "stochastic":
        return gen_stochastic(spec.n, spec.p, spec.seed)
    raise ValueError("file instances are loaded with gensort.io, not generated")
