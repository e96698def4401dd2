"""Orientation recovery parameterized by a clique bound on the forbidden graph.

``k`` must satisfy: every k vertices of G span at least one edge, i.e.
``k >= omega(H) + 1``. Vertices are inserted one at a time; the edges from a
new vertex to its already-processed neighbours are resolved through pivots
whose known predecessor and successor sets are large, so one probe settles
many edges at once.

Vertex sets inside the hot loops are Python int bitsets over global ids.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable

from .core import ComparisonGraph, GensortError, InternalError, OrientationStore, ProbeOracle


class PreconditionViolated(GensortError):
    pass


class KTooSmall(GensortError):
    """A merge round ended with k or more pairwise-incomparable roots."""


class EmptyIntersection(GensortError):
    pass


@dataclass
class SelectResult:
    z: frozenset[int]
    s_plus: dict[int, list[int]]
    n: int
    k: int
    rounds: int
    max_roots: int
    reverse: bool = False

    @property
    def min_plus(self) -> int:
        return min((len(self.s_plus[u]) for u in self.z), default=0)


@dataclass
class PivotResult:
    pivot: int
    s_plus: list[int]
    s_minus: list[int]


@dataclass
class PivotCall:
    n: int
    k: int
    z_plus: int
    z_minus: int
    min_plus: int
    min_minus: int
    probes: int


@dataclass
class DirectEdgesCall:
    u: int
    size: int
    k: int
    calls: int
    probes: int
    pivots: int
    bound: int


@dataclass
class Retry:
    u: int
    old_k: int
    new_k: int
    reason: str


Trace = Callable[[object], None]


def _bits(vertices: Iterable[int]) -> int:
    b = 0
    for v in vertices:
        b |= 1 << v
    return b


def _iter_bits(b: int):
    while b:
        low = b & -b
        yield low.bit_length() - 1
        b ^= low


def select(
    known: OrientationStore,
    g: ComparisonGraph,
    k: int,
    vertices: Iterable[int] | None = None,
    *,
    reverse: bool = False,
) -> SelectResult:
    """Find a large set Z whose members each have ``ceil(n/3k)`` known successors.

    Works on the subgraph of ``g`` induced by ``vertices`` (all of ``g`` by
    default) and reads orientations only from ``known``; no probes are made.
    With ``reverse=True`` every orientation is flipped, so the recorded sets
    hold known predecessors instead.

    Raises:
        PreconditionViolated: subgraph too small, or an orientation is missing.
        KTooSmall: a merge round left ``k`` or more roots.
    """
    verts = sorted(set(range(g.n)) if vertices is None else set(vertices))
    n = len(verts)
    if n <= 10 * k:
        raise PreconditionViolated(f"select needs more than 10k={10 * k} vertices, got {n}")
    adj = g.adjacency_bits
    directed = known.directed

    def below(a: int, b: int) -> bool:
        # a precedes b, after optional reversal
        try:
            low_to_high = directed[(a, b) if a < b else (b, a)]
        except KeyError:
            raise PreconditionViolated(f"orientation of ({a}, {b}) is unknown") from None
        return (low_to_high if a < b else not low_to_high) != reverse

    children: dict[int, list[int]] = {v: [] for v in verts}
    s_plus: dict[int, list[int]] = {v: [] for v in verts}
    alive = set(verts)
    roots = _bits(verts)
    rounds = math.ceil(n / (3 * k))
    max_roots = 0

    for _ in range(rounds):
        # Merge adjacent roots; pairs are taken lexicographically by id.
        a = -1
        while True:
            rest = roots >> (a + 1) << (a + 1)
            if not rest:
                break
            a = (rest & -rest).bit_length() - 1
            cand = adj[a] & roots & ~((1 << (a + 1)) - 1)
            while cand:
                low = cand & -cand
                b = low.bit_length() - 1
                cand ^= low
                if below(a, b):
                    children[b].append(a)
                    roots ^= 1 << a
                    break
                children[a].append(b)
                roots ^= low

        round_roots = list(_iter_bits(roots))
        max_roots = max(max_roots, len(round_roots))
        if len(round_roots) >= k:
            raise KTooSmall(f"{len(round_roots)} incomparable roots with k={k}")

        next_roots = 0
        for r in round_roots:
            stack = list(children[r])
            while stack:
                x = stack.pop()
                s_plus[x].append(r)
                stack.extend(children[x])
            for c in children[r]:
                next_roots |= 1 << c
            children[r] = []
            alive.discard(r)
        roots = next_roots

    return SelectResult(frozenset(alive), s_plus, n, k, rounds, max_roots, reverse)


def select_reversed(
    known: OrientationStore,
    g: ComparisonGraph,
    k: int,
    vertices: Iterable[int] | None = None,
) -> SelectResult:
    """As :func:`select` on the reversed orientation; ``s_plus`` then holds predecessors."""
    return select(known, g, k, vertices, reverse=True)


def pivot(
    known: OrientationStore,
    g: ComparisonGraph,
    k: int,
    vertices: Iterable[int] | None = None,
) -> PivotResult:
    """Pick the smallest-id vertex surviving both the forward and reversed select."""
    verts = list(range(g.n)) if vertices is None else list(vertices)
    return _pivot(known, g, k, verts)[0]


def _pivot(
    known: OrientationStore, g: ComparisonGraph, k: int, verts: Iterable[int]
) -> tuple[PivotResult, SelectResult, SelectResult]:
    verts = list(verts)
    up = select(known, g, k, verts)
    down = select_reversed(known, g, k, verts)
    common = up.z & down.z
    if not common:
        raise EmptyIntersection(f"no common survivor with k={k}")
    u = min(common)
    return PivotResult(u, up.s_plus[u], down.s_plus[u]), up, down


def direct_edges_bound(size: int, k: int) -> int:
    """Probe ceiling ``10k + ceil(log|S| / log(1/(1-1/3k))) + 1`` for one call."""
    if size <= 1:
        return 10 * k + 1
    eta = 1 - 1 / (3 * k)
    return 10 * k + math.ceil(math.log(size) / math.log(1 / eta)) + 1


def direct_edges(
    oracle: ProbeOracle,
    u: int,
    s: Iterable[int],
    known: OrientationStore,
    k: int,
    trace: Trace | None = None,
) -> None:
    """Resolve the direction of every edge ``{u, x}``, ``x`` in ``s``, into ``known``."""
    g = oracle.graph
    remaining = set(s)
    size = len(remaining)
    start_calls, start_probes = oracle.calls, oracle.probe_count
    pivots = 0
    threshold = 10 * k
    while len(remaining) > threshold:
        before = oracle.probe_count
        piv, up, down = _pivot(known, g, k, remaining)
        p = piv.pivot
        if trace is not None:
            trace(
                PivotCall(
                    len(remaining), k, len(up.z), len(down.z),
                    up.min_plus, down.min_plus, oracle.probe_count - before,
                )
            )
        pivots += 1
        remaining.discard(p)
        if oracle.probe(u, p):
            known.record(u, p)
            for x in piv.s_plus:
                known.record(u, x)
            remaining.difference_update(piv.s_plus)
        else:
            known.record(p, u)
            for x in piv.s_minus:
                known.record(x, u)
            remaining.difference_update(piv.s_minus)
    for x in sorted(remaining):
        if oracle.probe(u, x):
            known.record(u, x)
        else:
            known.record(x, u)

    calls = oracle.calls - start_calls
    bound = direct_edges_bound(size, k)
    if trace is not None:
        trace(DirectEdgesCall(u, size, k, calls, oracle.probe_count - start_probes, pivots, bound))
    if calls > bound:
        raise InternalError(f"direct_edges used {calls} probes, bound is {bound}")


def clique_solve(
    oracle: ProbeOracle,
    g: ComparisonGraph,
    k: int,
    trace: Trace | None = None,
) -> OrientationStore:
    """Recover every edge direction of ``g``.

    When ``k`` turns out too small for some vertex, that vertex's call is
    restarted on its still-unknown edges with ``k`` doubled (capped at ``n``).
    Later vertices start again from the caller's ``k``.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    known = OrientationStore()
    for u in range(g.n):
        s = [v for v in g.adjacency[u] if v < u]
        cur_k = k
        while True:
            try:
                direct_edges(oracle, u, s, known, cur_k, trace)
                break
            except (KTooSmall, EmptyIntersection) as exc:
                new_k = min(2 * cur_k, max(g.n, 2))
                if new_k == cur_k:
                    raise
                if trace is not None:
                    trace(Retry(u, cur_k, new_k, type(exc).__name__))
                cur_k = new_k
                s = [x for x in s if not known.knows(u, x)]
    return known
