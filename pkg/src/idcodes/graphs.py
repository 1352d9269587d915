"""Finite simple graphs, breadth-first distances and radius balls.

Vertices are always the integers 0..n-1.  Graphs are immutable once built;
all distance queries go through a precomputed matrix so that ball lookups
are cheap for the verifier and the exhaustive solver.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import numpy as np

# Distance reported for disconnected pairs.  Strictly larger than any path
# length we can meet, and small enough that sums of two of them fit in int64.
INFINITE = 2**32


class GraphParseError(ValueError):
    """Raised when an edge-list document is malformed."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``adjacency[v]`` is the neighbor set of ``v``.  The ``label`` carries the
    shorthand spec ("cycle:12", "path:5") when the graph was built from one;
    the solver uses it to recognise cycles.
    """

    n: int
    adjacency: tuple[frozenset[int], ...]
    label: str | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"graph needs at least one vertex, got n={self.n}")
        if len(self.adjacency) != self.n:
            raise ValueError("adjacency list length does not match vertex count")
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if not 0 <= v < self.n:
                    raise ValueError(f"neighbor {v} of vertex {u} is out of range")
                if v == u:
                    raise ValueError(f"self-loop at vertex {u}")
                if u not in self.adjacency[v]:
                    raise ValueError(f"edge {u}-{v} is missing its reverse direction")

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as ordered pairs (u, v) with u < v."""
        return tuple(
            (u, v) for u in range(self.n) for v in sorted(self.adjacency[u]) if u < v
        )

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])


def from_edges(n: int, edges: Iterable[tuple[int, int]], label: str | None = None) -> Graph:
    """Build a graph from an edge list, collapsing duplicates."""
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) references a vertex outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(frozenset(s) for s in nbrs), label)


def build_cycle(n: int) -> Graph:
    """The cycle C_n (n >= 3), labelled "cycle:n"."""
    if n < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got n={n}")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)], label=f"cycle:{n}")


def build_path(n: int) -> Graph:
    """The path P_n (n >= 1), labelled "path:n"."""
    if n < 1:
        raise ValueError(f"a path needs at least 1 vertex, got n={n}")
    return from_edges(n, [(i, i + 1) for i in range(n - 1)], label=f"path:{n}")


def cycle_order(g: Graph) -> int | None:
    """Return n if ``g`` carries a "cycle:n" label consistent with its order."""
    if g.label and g.label.startswith("cycle:"):
        try:
            n = int(g.label.split(":", 1)[1])
        except ValueError:
            return None
        if n == g.n:
            return n
    return None


class DistanceMatrix:
    """All-pairs shortest path distances, read only.

    ``d`` is an (n, n) int64 array with INFINITE marking disconnected pairs.
    Ball bitmasks per radius are cached on first use: bit y of
    ``ball_mask(rho)[x]`` is set iff d(x, y) <= rho.
    """

    def __init__(self, d: np.ndarray):
        if d.ndim != 2 or d.shape[0] != d.shape[1]:
            raise ValueError("distance matrix must be square")
        d = np.ascontiguousarray(d, dtype=np.int64)
        d.setflags(write=False)
        self.d = d
        self.n = d.shape[0]
        self._mask_cache: dict[int, list[int]] = {}

    def dist(self, x: int, y: int) -> int:
        return int(self.d[x, y])

    def ball_mask(self, rho: int) -> list[int]:
        """Per-vertex ball membership bitmasks at radius ``rho``."""
        masks = self._mask_cache.get(rho)
        if masks is None:
            bits = self.d <= rho
            packed = np.packbits(bits, axis=1, bitorder="little")
            masks = [int.from_bytes(packed[x].tobytes(), "little") for x in range(self.n)]
            self._mask_cache[rho] = masks
        return masks


@lru_cache(maxsize=256)
def distances(g: Graph) -> DistanceMatrix:
    """BFS from every vertex; O(n * (n + m))."""
    d = np.full((g.n, g.n), INFINITE, dtype=np.int64)
    for src in range(g.n):
        row = d[src]
        row[src] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            du = row[u]
            for v in g.adjacency[u]:
                if row[v] == INFINITE:
                    row[v] = du + 1
                    queue.append(v)
    return DistanceMatrix(d)


def ball(dm: DistanceMatrix, x: int, rho: int) -> frozenset[int]:
    """The ball B_rho(x): all vertices at distance <= rho from x."""
    if rho < 0:
        raise ValueError(f"radius must be nonnegative, got {rho}")
    if not 0 <= x < dm.n:
        raise ValueError(f"vertex {x} out of range")
    return frozenset(int(y) for y in np.flatnonzero(dm.d[x] <= rho))


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: a header line "n m", then m lines "u v".

    Lines whose first non-blank character is '#' are comments; blank lines
    are skipped.  Errors name the offending line number.
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = stripped.split()
        if len(fields) != 2:
            raise GraphParseError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphParseError(f"line {lineno}: expected two integers, got {raw!r}") from None
        if header is None:
            if a < 1:
                raise GraphParseError(f"line {lineno}: vertex count must be >= 1, got {a}")
            if b < 0:
                raise GraphParseError(f"line {lineno}: edge count must be >= 0, got {b}")
            header = (a, b)
            continue
        n, m = header
        if len(edges) == m:
            raise GraphParseError(f"line {lineno}: more than the {m} edges announced in the header")
        if not (0 <= a < n and 0 <= b < n):
            raise GraphParseError(f"line {lineno}: vertex out of range 0..{n - 1}")
        if a == b:
            raise GraphParseError(f"line {lineno}: self-loop at vertex {a}")
        edges.append((a, b))
    if header is None:
        raise GraphParseError("line 1: missing header line 'n m'")
    n, m = header
    if len(edges) != m:
        raise GraphParseError(f"header announced {m} edges but only {len(edges)} were given")
    return from_edges(n, edges)


def serialize_graph(g: Graph, comments: Iterable[str] = ()) -> str:
    """Serialize to the edge-list format, optionally with leading comments."""
    lines = [f"# {c}" for c in comments]
    edges = g.edges
    lines.append(f"{g.n} {len(edges)}")
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def graph_from_spec(spec: str) -> Graph:
    """Build a graph from a shorthand spec, "cycle:n" or "path:n"."""
    kind, sep, arg = spec.partition(":")
    if not sep:
        raise GraphParseError(
            f"not a graph spec: {spec!r} (expected 'cycle:n' or 'path:n')"
        )
    try:
        n = int(arg)
    except ValueError:
        raise GraphParseError(f"bad vertex count in graph spec {spec!r}") from None
    if kind == "cycle":
        return build_cycle(n)
    if kind == "path":
        return build_path(n)
    raise GraphParseError(f"unknown graph kind {kind!r} (expected 'cycle' or 'path')")
