"""Parameter estimation: colorings of H and the clique bound k = omega(H) + 1."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Literal

from .colorsolve import Coloring
from .core import ComparisonGraph, ForbiddenGraph, GensortError, forbidden_graph

EXACT_LIMIT = 64


class TooLarge(GensortError):
    pass


@dataclass
class ParamEstimate:
    k: int
    method: Literal["exact", "greedy", "doubling"]
    witness: list[int] = field(default_factory=list)


def greedy_coloring(h: ComparisonGraph, order_seed: int = 0) -> Coloring:
    """Welsh-Powell: first-fit coloring in order of decreasing degree.

    Ties between equal degrees are broken by a shuffle seeded with ``order_seed``.
    """
    tiebreak = list(range(h.n))
    random.Random(order_seed).shuffle(tiebreak)
    order = sorted(range(h.n), key=lambda v: (-h.degree(v), tiebreak[v]))
    colors = [0] * h.n
    for v in order:
        used = {colors[w] for w in h.adjacency[v]}
        c = 1
        while c in used:
            c += 1
        colors[v] = c
    return Coloring(tuple(colors), max(colors, default=0))


def _color_sort(p: int, adj: tuple[int, ...]) -> tuple[list[int], list[int]]:
    # Greedy color the candidate set; color classes give an upper bound on
    # the clique size reachable from each prefix.
    order: list[int] = []
    bounds: list[int] = []
    uncolored = p
    color = 0
    while uncolored:
        color += 1
        avail = uncolored
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            uncolored ^= low
            avail &= ~adj[v] & ~low
            order.append(v)
            bounds.append(color)
    return order, bounds


def max_clique(h: ComparisonGraph, size_limit: int = EXACT_LIMIT) -> list[int]:
    """A maximum clique of ``h`` by branch and bound with a coloring bound."""
    if h.n > size_limit:
        raise TooLarge(f"exact clique search limited to {size_limit} vertices, got {h.n}")
    if h.n == 0:
        return []
    adj = h.adjacency_bits
    best: list[int] = [0]  # any single vertex is a clique

    def expand(p: int, clique: list[int]) -> None:
        order, bounds = _color_sort(p, adj)
        for v, bound in zip(reversed(order), reversed(bounds)):
            if len(clique) + bound <= len(best):
                return
            clique.append(v)
            sub = p & adj[v]
            if sub:
                expand(sub, clique)
            elif len(clique) > len(best):
                best[:] = clique
            clique.pop()
            p &= ~(1 << v)

    expand((1 << h.n) - 1, [])
    return sorted(best)


def max_clique_exact(h: ComparisonGraph, size_limit: int = EXACT_LIMIT) -> int:
    return len(max_clique(h, size_limit))


def greedy_independent_set(g: ComparisonGraph) -> list[int]:
    """Maximal independent set of ``g`` grown by repeatedly taking a minimum-degree vertex."""
    adj = g.adjacency_bits
    live = (1 << g.n) - 1
    chosen = []
    while live:
        best_v, best_deg = -1, -1
        rest = live
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            deg = (adj[v] & live).bit_count()
            if best_v < 0 or deg < best_deg:
                best_v, best_deg = v, deg
        chosen.append(best_v)
        live &= ~adj[best_v] & ~(1 << best_v)
    return sorted(chosen)


def estimate_k(g: ComparisonGraph, exact_limit: int = EXACT_LIMIT) -> ParamEstimate:
    """k = omega(H) + 1, exact for small graphs, greedy lower estimate otherwise."""
    if g.n <= exact_limit:
        witness = max_clique(forbidden_graph(g), exact_limit)
        return ParamEstimate(len(witness) + 1, "exact", witness)
    witness = greedy_independent_set(g)
    return ParamEstimate(len(witness) + 1, "greedy", witness)


def forbidden_coloring(g: ComparisonGraph, order_seed: int = 0) -> Coloring:
    """Greedy coloring of the forbidden graph of ``g``: a valid input for color_solve."""
    h: ForbiddenGraph = forbidden_graph(g)
    return greedy_coloring(h, order_seed)
