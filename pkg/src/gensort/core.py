"""Graphs, the hidden-orientation probe oracle, and orientation bookkeeping.

Vertices are dense integer ids ``0..n-1``. An undirected edge is always keyed
as ``(min, max)``; a direction is a boolean telling whether that key is
oriented low-to-high.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]


class GensortError(Exception):
    """Base class for all errors raised by this package."""


class ForbiddenPair(GensortError):
    """A probe or comparison was attempted on a pair that is not an edge of G."""


class InvalidVertex(GensortError):
    pass


class ParseError(GensortError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class DuplicateEdge(ParseError):
    pass


class SelfLoop(ParseError):
    pass


class InternalError(GensortError):
    """An invariant that the algorithms guarantee was found broken."""


class ConflictingOrientation(InternalError):
    pass


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class ComparisonGraph:
    """Undirected simple graph on ``0..n-1``.

    Used both for the comparability graph G and for its complement H.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        keys: set[Edge] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertex(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise SelfLoop(f"self-loop on vertex {u}")
            key = edge_key(u, v)
            if key in keys:
                raise DuplicateEdge(f"duplicate edge {key}")
            keys.add(key)
        self.edges: frozenset[Edge] = frozenset(keys)
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in keys:
            adj[u].append(v)
            adj[v].append(u)
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self.edges

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    @cached_property
    def adjacency_bits(self) -> tuple[int, ...]:
        """Neighbourhoods as Python int bitsets (bit ``v`` set iff ``v`` adjacent)."""
        bits = []
        for nbrs in self.adjacency:
            b = 0
            for v in nbrs:
                b |= 1 << v
            bits.append(b)
        return tuple(bits)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ComparisonGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, m={self.m})"


class ForbiddenGraph(ComparisonGraph):
    """The complement H of a comparison graph: pairs that may never be probed."""


def forbidden_graph(g: ComparisonGraph) -> ForbiddenGraph:
    n = g.n
    return ForbiddenGraph(
        n,
        ((u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in g.edges),
    )


class GroundTruth:
    """Acyclic orientation of every edge of G.

    Built either from a total order (``rank[v]`` = position of ``v``) or from an
    explicit orientation map ``{(min, max): low_to_high}``.
    """

    def __init__(
        self,
        graph: ComparisonGraph,
        *,
        rank: Sequence[int] | None = None,
        orientation: dict[Edge, bool] | None = None,
    ):
        if (rank is None) == (orientation is None):
            raise ValueError("give exactly one of rank or orientation")
        self.graph = graph
        self.rank: tuple[int, ...] | None = None
        if rank is not None:
            if sorted(rank) != list(range(graph.n)):
                raise ValueError("rank must be a permutation of 0..n-1")
            self.rank = tuple(rank)
            self._orientation = {e: self.rank[e[0]] < self.rank[e[1]] for e in graph.edges}
        else:
            assert orientation is not None
            if set(orientation) != set(graph.edges):
                raise ValueError("orientation must cover exactly the edges of the graph")
            self._orientation = dict(orientation)
            if not is_acyclic(graph.n, self.directed_edges()):
                raise ValueError("orientation contains a directed cycle")

    @classmethod
    def from_order(cls, graph: ComparisonGraph, order: Sequence[int]) -> GroundTruth:
        """``order`` lists vertices from minimum to maximum."""
        rank = [0] * graph.n
        if sorted(order) != list(range(graph.n)):
            raise ValueError("order must be a permutation of 0..n-1")
        for pos, v in enumerate(order):
            rank[v] = pos
        return cls(graph, rank=rank)

    def precedes(self, u: int, v: int) -> bool:
        key = edge_key(u, v)
        low_to_high = self._orientation[key]
        return low_to_high if u < v else not low_to_high

    def directed_edges(self) -> list[Edge]:
        return sorted((u, v) if up else (v, u) for (u, v), up in self._orientation.items())

    def order(self) -> list[int] | None:
        if self.rank is None:
            return None
        order = [0] * len(self.rank)
        for v, r in enumerate(self.rank):
            order[r] = v
        return order


class ProbeOracle:
    """Counting, memoizing gateway to the hidden orientation.

    ``probe_count`` counts distinct edges revealed; ``calls`` counts every
    invocation, including memoized repeats.
    """

    def __init__(self, truth: GroundTruth):
        self.truth = truth
        self.graph = truth.graph
        self.probe_count = 0
        self.calls = 0
        self._cache: dict[Edge, bool] = {}

    def probe(self, u: int, v: int) -> int:
        """Return 1 if ``u`` precedes ``v``, else 0."""
        n = self.graph.n
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidVertex(f"vertex out of range: ({u}, {v})")
        key = edge_key(u, v)
        if key not in self.graph.edges:
            raise ForbiddenPair(f"{key} is not a comparable pair")
        self.calls += 1
        low_to_high = self._cache.get(key)
        if low_to_high is None:
            low_to_high = self.truth.precedes(*key)
            self._cache[key] = low_to_high
            self.probe_count += 1
        return int(low_to_high if u < v else not low_to_high)

    @property
    def cache(self) -> dict[Edge, bool]:
        return dict(self._cache)


@dataclass
class OrientationStore:
    """Directions discovered so far, one entry per edge."""

    directed: dict[Edge, bool] = field(default_factory=dict)

    def record(self, u: int, v: int) -> None:
        """Record ``u -> v``. Re-recording the same direction is a no-op."""
        key = edge_key(u, v)
        low_to_high = u < v
        prev = self.directed.get(key)
        if prev is None:
            self.directed[key] = low_to_high
        elif prev != low_to_high:
            raise ConflictingOrientation(f"edge {key} already oriented the other way")

    def knows(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self.directed

    def precedes(self, u: int, v: int) -> bool:
        """True iff ``u -> v`` is recorded. Raises KeyError when unknown."""
        low_to_high = self.directed[edge_key(u, v)]
        return low_to_high if u < v else not low_to_high

    def all_known_within(self, g: ComparisonGraph, vertices: Iterable[int]) -> bool:
        vs = set(vertices)
        return all(
            edge_key(u, w) in self.directed for u in vs for w in g.adjacency[u] if w in vs and u < w
        )

    def directed_edges(self) -> list[Edge]:
        return sorted((u, v) if up else (v, u) for (u, v), up in self.directed.items())

    def __len__(self) -> int:
        return len(self.directed)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.directed_edges())


class ScaffoldGraph:
    """Sparse directed graph whose transitive closure fixes every orientation."""

    def __init__(self, n: int):
        self.n = n
        self.succ: list[list[int]] = [[] for _ in range(n)]
        self.edges: list[Edge] = []

    def add_edge(self, u: int, v: int) -> None:
        self.succ[u].append(v)
        self.edges.append((u, v))

    def __len__(self) -> int:
        return len(self.edges)


def reachable(a: ScaffoldGraph, u: int, v: int) -> bool:
    """Iterative DFS: is there a directed path from ``u`` to ``v``?"""
    if u == v:
        return True
    seen = {u}
    stack = [u]
    while stack:
        x = stack.pop()
        for y in a.succ[x]:
            if y == v:
                return True
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return False


def topological_order(n: int, edges: Iterable[Edge]) -> list[int] | None:
    """Kahn's algorithm. Returns None when the graph has a cycle."""
    succ: list[list[int]] = [[] for _ in range(n)]
    indeg = [0] * n
    for u, v in edges:
        succ[u].append(v)
        indeg[v] += 1
    queue = deque(v for v in range(n) if indeg[v] == 0)
    order = []
    while queue:
        x = queue.popleft()
        order.append(x)
        for y in succ[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                queue.append(y)
    return order if len(order) == n else None


def is_acyclic(n: int, edges: Iterable[Edge]) -> bool:
    return topological_order(n, edges) is not None


def transitive_closure(a: ScaffoldGraph) -> list[int]:
    """Reachability bitsets: bit ``v`` of ``closure[u]`` set iff ``u`` reaches ``v``.

    Requires ``a`` to be acyclic.
    """
    order = topological_order(a.n, a.edges)
    if order is None:
        raise InternalError("scaffold graph has a cycle")
    closure = [1 << u for u in range(a.n)]
    for x in reversed(order):
        bits = closure[x]
        for y in a.succ[x]:
            bits |= closure[y]
        closure[x] = bits
    return closure


@dataclass
class OrientationReport:
    complete: bool
    acyclic: bool
    missing: list[Edge] = field(default_factory=list)
    extra: list[Edge] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.complete and self.acyclic and not self.extra


def validate_orientation(g: ComparisonGraph, o: OrientationStore) -> OrientationReport:
    missing = sorted(e for e in g.edges if e not in o.directed)
    extra = sorted(e for e in o.directed if e not in g.edges)
    return OrientationReport(
        complete=not missing,
        acyclic=is_acyclic(g.n, o.directed_edges()),
        missing=missing,
        extra=extra,
    )
