"""Simple undirected graphs: construction, validation, edge-list and graph6 I/O.

Vertices are dense 0-based indices. Original textual labels, when an edge
list uses tokens instead of integers, are kept in a side map for reporting;
all computation happens on indices. Graph values are immutable after
construction and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Graph",
    "GraphFormatError",
    "adjacency_matrix",
    "connected_components",
    "disjoint_union",
    "emit_edge_list",
    "emit_graph6",
    "is_connected",
    "is_regular",
    "parse_edge_list",
    "parse_graph6",
]


class GraphFormatError(ValueError):
    """Raised when graph input text or bytes cannot be parsed."""


@dataclass(frozen=True, eq=False)
class Graph:
    """A simple undirected graph on vertices 0..n-1.

    Edges are stored as a sorted tuple of (i, j) pairs with i < j; no
    self-loops, no multi-edges. ``labels`` maps indices back to original
    input tokens and is ``None`` when vertices were given as integers.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphFormatError("graph must have ≥ 1 vertex")
        seen = set()
        for i, j in self.edges:
            if i == j:
                raise GraphFormatError(f"self-loop at vertex {i}")
            if not (0 <= i < j < self.n):
                raise GraphFormatError(f"edge ({i}, {j}) out of range for n={self.n}")
            if (i, j) in seen:
                raise GraphFormatError(f"duplicate edge ({i}, {j})")
            seen.add((i, j))
        object.__setattr__(self, "edges", tuple(sorted(self.edges)))
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphFormatError("label map length must equal vertex count")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ) -> "Graph":
        """Build a Graph, normalizing edge orientation and collapsing duplicates."""
        normalized = set()
        for i, j in edges:
            if i == j:
                raise GraphFormatError(f"self-loop at vertex {i}")
            normalized.add((i, j) if i < j else (j, i))
        return cls(n, tuple(sorted(normalized)), tuple(labels) if labels else None)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return tuple(deg)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return tuple(tuple(sorted(a)) for a in adj)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def label_of(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def adjacency_matrix(g: Graph) -> np.ndarray:
    """Dense symmetric 0/1 adjacency matrix with zero diagonal (float64)."""
    a = np.zeros((g.n, g.n))
    for i, j in g.edges:
        a[i, j] = 1.0
        a[j, i] = 1.0
    return a


def is_regular(g: Graph) -> bool:
    """True iff every vertex has the same degree."""
    deg = g.degrees
    return all(d == deg[0] for d in deg)


def connected_components(g: Graph) -> list[list[int]]:
    """Partition of the vertex set by connectivity, ordered by smallest member."""
    seen = [False] * g.n
    comps: list[list[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        stack = [start]
        while stack:
            v = stack.pop()
            for w in g.neighbors[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def disjoint_union(a: Graph, b: Graph) -> Graph:
    """Disjoint union; vertices of ``b`` are shifted by ``a.n``. Labels dropped."""
    edges = list(a.edges) + [(i + a.n, j + a.n) for i, j in b.edges]
    return Graph.from_edges(a.n + b.n, edges)


# ---------------------------------------------------------------------------
# edge-list format: one edge per line, '#'-prefixed comment lines

def parse_edge_list(text: str) -> Graph:
    """Parse line-oriented edge-list text into a Graph.

    Each non-comment line holds two whitespace-separated labels. When every
    label is a non-negative integer the labels are vertex indices and
    n = max index + 1; otherwise labels are interned to dense indices in
    first-appearance order. Duplicate edges collapse; self-loops are
    rejected with their line number.
    """
    raw_pairs: list[tuple[str, str, int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise GraphFormatError(
                f"line {lineno}: expected two vertex labels, got {len(parts)}"
            )
        raw_pairs.append((parts[0], parts[1], lineno))

    if not raw_pairs:
        raise GraphFormatError("graph must have ≥ 1 vertex")

    integer_mode = all(u.isdigit() and v.isdigit() for u, v, _ in raw_pairs)
    edges = set()
    if integer_mode:
        n = 0
        for u, v, lineno in raw_pairs:
            i, j = int(u), int(v)
            if i == j:
                raise GraphFormatError(f"self-loop at line {lineno}")
            n = max(n, i + 1, j + 1)
            edges.add((i, j) if i < j else (j, i))
        return Graph(n, tuple(sorted(edges)))

    table: dict[str, int] = {}
    for u, v, lineno in raw_pairs:
        if u == v:
            raise GraphFormatError(f"self-loop at line {lineno}")
        for tok in (u, v):
            if tok not in table:
                table[tok] = len(table)
        i, j = table[u], table[v]
        edges.add((i, j) if i < j else (j, i))
    labels = tuple(sorted(table, key=table.get))
    return Graph(len(table), tuple(sorted(edges)), labels)


def emit_edge_list(g: Graph) -> str:
    """Edge-list text for ``g``; inverse of parse_edge_list up to isolated
    trailing vertices (the format cannot represent them)."""
    lines = [f"{g.label_of(i)} {g.label_of(j)}" for i, j in g.edges]
    return "\n".join(lines) + ("\n" if lines else "")


# ---------------------------------------------------------------------------
# graph6 format: size field then upper-triangle bits, column by column,
# packed big-endian 6 bits per byte, every byte offset by 63.

_G6_HEADER = ">>graph6<<"


def _g6_size(data: bytes) -> tuple[int, int]:
    """Decode the size field; returns (n, bytes consumed)."""
    if not data:
        raise GraphFormatError("malformed graph6: empty input")
    b0 = data[0]
    if b0 != 126:
        return b0 - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphFormatError("malformed graph6: truncated size field")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise GraphFormatError("malformed graph6: truncated size field")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def parse_graph6(data: bytes | str) -> Graph:
    """Parse one graph6-encoded graph (a single ASCII line).

    Rejects bytes outside [63, 126], wrong payload length, and nonzero
    trailing pad bits.
    """
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    data = data.strip()
    if data.startswith(_G6_HEADER.encode()):
        data = data[len(_G6_HEADER):]
    for b in data:
        if not 63 <= b <= 126:
            raise GraphFormatError(f"malformed graph6: byte {b} outside [63, 126]")
    n, used = _g6_size(data)
    if n == 0:
        raise GraphFormatError("graph must have ≥ 1 vertex")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    payload = data[used:]
    if len(payload) != nbytes:
        raise GraphFormatError(
            f"malformed graph6: expected {nbytes} payload bytes, got {len(payload)}"
        )
    bits = []
    for b in payload:
        v = b - 63
        bits.extend((v >> k) & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise GraphFormatError("malformed graph6: nonzero trailing bits")
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph(n, tuple(edges))


def emit_graph6(g: Graph) -> str:
    """graph6 encoding of ``g``; bit-exact round trip with parse_graph6."""
    n = g.n
    out = bytearray()
    if n <= 62:
        out.append(n + 63)
    elif n <= 258047:
        out.append(126)
        out.extend(((n >> s) & 63) + 63 for s in (12, 6, 0))
    elif n <= 68719476735:
        out.extend((126, 126))
        out.extend(((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0))
    else:
        raise GraphFormatError("graph too large for graph6 encoding")
    present = set(g.edges)
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if (i, j) in present else 0)
    while len(bits) % 6:
        bits.append(0)
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k : k + 6]:
            v = (v << 1) | b
        out.append(v + 63)
    return out.decode("ascii")
