"""Orientation recovery from a proper coloring of the forbidden graph.

Every color class is a clique of G, so it can be merge-sorted into a chain.
Two-pointer sweeps between every ordered pair of chains then add a few
cross edges to a scaffold graph whose transitive closure decides every edge.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .core import (
    ComparisonGraph,
    GensortError,
    InternalError,
    OrientationStore,
    ProbeOracle,
    ScaffoldGraph,
    transitive_closure,
)


class InvalidColoring(GensortError):
    pass


@dataclass(frozen=True)
class Coloring:
    """``f[v]`` is the color of vertex ``v``, numbered ``1..k``."""

    f: tuple[int, ...]
    k: int

    @classmethod
    def from_list(cls, colors: Sequence[int]) -> Coloring:
        return cls(tuple(colors), max(colors, default=0))

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.f):
            out[c - 1].append(v)
        return out


@dataclass
class MergeSortCall:
    size: int
    calls: int
    probes: int


@dataclass
class AddEdgesCall:
    i: int
    j: int
    len_i: int
    len_j: int
    calls: int
    probes: int
    added: int


Trace = Callable[[object], None]


def validate_coloring(g: ComparisonGraph, c: Coloring) -> bool:
    if len(c.f) != g.n or any(not 1 <= x <= c.k for x in c.f):
        return False
    adj = g.adjacency_bits
    for cls in c.classes():
        mask = 0
        for v in cls:
            mask |= 1 << v
        for v in cls:
            need = mask & ~(1 << v)
            if adj[v] & need != need:
                return False
    return True


def merge_sort_class(oracle: ProbeOracle, s: Sequence[int]) -> list[int]:
    """Sort ``s`` ascending under the hidden order. Stable top-down merge sort."""
    s = list(s)
    if len(s) <= 1:
        return s
    mid = len(s) // 2
    left = merge_sort_class(oracle, s[:mid])
    right = merge_sort_class(oracle, s[mid:])
    out = []
    i = j = 0
    while i < len(left) and j < len(right):
        if oracle.probe(left[i], right[j]):
            out.append(left[i])
            i += 1
        else:
            out.append(right[j])
            j += 1
    out.extend(left[i:])
    out.extend(right[j:])
    return out


def add_edges(
    oracle: ProbeOracle,
    chain_i: Sequence[int],
    chain_j: Sequence[int],
    a: ScaffoldGraph,
) -> int:
    """Two-pointer sweep adding edges ``chain_j[L] -> chain_i[R]`` to ``a``.

    For each element of ``chain_j``, from the largest down, scans its
    comparable elements of ``chain_i`` lying strictly left of the pointer,
    right to left. A successor moves the pointer onto it; a predecessor ends
    the scan. The pointer then names the smallest known successor of the
    ``chain_j`` element in ``chain_i``.

    An edge is added only when the pointer moved during that element's scan,
    so every scaffold edge was probed directly. When the pointer stays put,
    the relation already follows from the ``chain_j`` chain edges plus the
    edge added for a later element.

    Returns the number of oracle calls made, which never exceeds
    ``len(chain_i) + len(chain_j)``.
    """
    adj = oracle.graph.adjacency_bits
    calls = 0
    r = len(chain_i)  # 0-based; len(chain_i) means "past the end"
    for lpos in range(len(chain_j) - 1, -1, -1):
        low = chain_j[lpos]
        nbrs = adj[low]
        moved = False
        for x in range(r - 1, -1, -1):
            cand = chain_i[x]
            if not (nbrs >> cand) & 1:
                continue
            calls += 1
            if oracle.probe(low, cand):
                r = x
                moved = True
            else:
                break
        if moved:
            a.add_edge(low, chain_i[r])
    if calls > len(chain_i) + len(chain_j):
        raise InternalError("two-pointer sweep exceeded its probe budget")
    return calls


def build_scaffold(
    oracle: ProbeOracle,
    g: ComparisonGraph,
    c: Coloring,
    trace: Trace | None = None,
) -> tuple[list[list[int]], ScaffoldGraph]:
    """Sort every color class and build the scaffold graph.

    Returns the chains (one per color, empty classes included) and the graph.
    """
    if not validate_coloring(g, c):
        raise InvalidColoring("some same-colored pair is not comparable")
    a = ScaffoldGraph(g.n)
    chains = []
    for cls in c.classes():
        before_calls, before_probes = oracle.calls, oracle.probe_count
        chain = merge_sort_class(oracle, cls)
        if trace is not None and cls:
            trace(MergeSortCall(len(cls), oracle.calls - before_calls, oracle.probe_count - before_probes))
        for x, y in zip(chain, chain[1:]):
            a.add_edge(x, y)
        chains.append(chain)

    for i, chain_i in enumerate(chains):
        for j, chain_j in enumerate(chains):
            if i == j or not chain_i or not chain_j:
                continue
            before_probes, before_edges = oracle.probe_count, len(a)
            calls = add_edges(oracle, chain_i, chain_j, a)
            if trace is not None:
                trace(
                    AddEdgesCall(
                        i + 1, j + 1, len(chain_i), len(chain_j), calls,
                        oracle.probe_count - before_probes, len(a) - before_edges,
                    )
                )
    return chains, a


def orient_from_scaffold(g: ComparisonGraph, a: ScaffoldGraph) -> OrientationStore:
    closure = transitive_closure(a)
    store = OrientationStore()
    for u, v in g.sorted_edges():
        forward = (closure[u] >> v) & 1
        backward = (closure[v] >> u) & 1
        if forward == backward:
            raise InternalError(f"edge ({u}, {v}) is reachable in {'both' if forward else 'neither'} direction")
        if forward:
            store.record(u, v)
        else:
            store.record(v, u)
    return store


def color_solve(
    oracle: ProbeOracle,
    g: ComparisonGraph,
    c: Coloring,
    trace: Trace | None = None,
) -> OrientationStore:
    _, a = build_scaffold(oracle, g, c, trace)
    return orient_from_scaffold(g, a)


def color_solve_budget(n: int, k: int) -> int:
    """Probe ceiling ``n*ceil(log2 n) + 2nk`` for a k-coloring."""
    log = math.ceil(math.log2(n)) if n > 1 else 0
    return n * log + 2 * n * k
