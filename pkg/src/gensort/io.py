"""Text formats: graphs, ground-truth orders, orientations, colorings.

All formats are UTF-8 with LF newlines. Lines starting with ``#`` and blank
lines are ignored on input.
"""

from __future__ import annotations

from pathlib import Path
from typing import IO, Iterable, Iterator, Sequence, Union

from .core import ComparisonGraph, DuplicateEdge, Edge, ParseError, SelfLoop

Source = Union[str, bytes, IO[str], IO[bytes], Path]


def _read_text(src: Source) -> str:
    if isinstance(src, Path):
        return src.read_text(encoding="utf-8")
    if isinstance(src, bytes):
        return src.decode("utf-8")
    if isinstance(src, str):
        return src
    data = src.read()
    return data.decode("utf-8") if isinstance(data, bytes) else data


def _data_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _ints(tokens: list[str], lineno: int, expected: int | None = None) -> list[int]:
    if expected is not None and len(tokens) != expected:
        raise ParseError(f"expected {expected} integers, got {len(tokens)}", lineno)
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"not an integer in {' '.join(tokens)!r}", lineno) from None


def load_graph(src: Source) -> ComparisonGraph:
    lines = _data_lines(_read_text(src))
    try:
        lineno, tokens = next(lines)
    except StopIteration:
        raise ParseError("empty graph file") from None
    n, m = _ints(tokens, lineno, 2)
    if n < 0 or m < 0:
        raise ParseError("n and m must be non-negative", lineno)
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for lineno, tokens in lines:
        if len(edges) == m:
            raise ParseError(f"more than the declared {m} edge lines", lineno)
        u, v = _ints(tokens, lineno, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range 0..{n - 1}", lineno)
        if u == v:
            raise SelfLoop(f"self-loop on vertex {u}", lineno)
        if u > v:
            raise ParseError(f"edge must be written with u < v, got {u} {v}", lineno)
        if (u, v) in seen:
            raise DuplicateEdge(f"duplicate edge {u} {v}", lineno)
        seen.add((u, v))
        edges.append((u, v))
    if len(edges) != m:
        raise ParseError(f"declared {m} edges, found {len(edges)}")
    return ComparisonGraph(n, edges)


def dump_graph(g: ComparisonGraph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(out) + "\n"


def load_order(src: Source, n: int | None = None) -> list[int]:
    """Ground-truth order: one line of vertex ids, minimum first."""
    rows = list(_data_lines(_read_text(src)))
    if len(rows) > 1:
        raise ParseError("order file must hold a single line", rows[1][0])
    order = _ints(rows[0][1], rows[0][0]) if rows else []
    lineno = rows[0][0] if rows else None
    if sorted(order) != list(range(len(order))):
        raise ParseError("order is not a permutation of 0..n-1", lineno)
    if n is not None and len(order) != n:
        raise ParseError(f"order has {len(order)} entries, graph has {n} vertices", lineno)
    return order


def dump_order(order: Sequence[int]) -> str:
    return " ".join(map(str, order)) + "\n"


def load_orientation(src: Source) -> list[Edge]:
    """Orientation file: one ``u v`` line per directed edge ``u -> v``."""
    out = []
    for lineno, tokens in _data_lines(_read_text(src)):
        u, v = _ints(tokens, lineno, 2)
        if u == v:
            raise SelfLoop(f"self-loop on vertex {u}", lineno)
        out.append((u, v))
    return out


def dump_orientation(edges: Iterable[Edge]) -> str:
    return "".join(f"{u} {v}\n" for u, v in sorted(edges))


def load_coloring(src: Source, n: int | None = None) -> list[int]:
    """Coloring file: one line, the i-th integer being the color of vertex i (1-based)."""
    rows = list(_data_lines(_read_text(src)))
    if len(rows) != 1:
        raise ParseError("coloring file must hold exactly one line")
    colors = _ints(rows[0][1], rows[0][0])
    if any(c < 1 for c in colors):
        raise ParseError("colors are numbered from 1", rows[0][0])
    if n is not None and len(colors) != n:
        raise ParseError(f"coloring has {len(colors)} entries, graph has {n} vertices", rows[0][0])
    return colors


def dump_coloring(colors: Sequence[int]) -> str:
    return " ".join(map(str, colors)) + "\n"
