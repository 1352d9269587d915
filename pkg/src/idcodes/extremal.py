"""Largest graphs a fixed-size weak code can handle, with witnesses.

A weak r-code of size k cannot serve more than w_max(r, k) = k + r(2^k - 2)
vertices: each non-code vertex is pinned down by the nonempty proper subset
of the code it sees at its own radius, and there are 2^k - 2 such subsets
available at each of the r radii.  build_extremal produces a graph meeting
the bound exactly: a k-clique (the code) with r layers of subset-tagged
vertices hanging off it, the layer-j vertex tagged S sitting at distance j
from exactly the clique vertices in S.
"""

from __future__ import annotations

from dataclasses import dataclass

from .families import FamilySpec, VerificationReport
from .graphs import Graph, from_edges, serialize_graph
from .verification import check_code


def w_max(r: int, k: int) -> int:
    """Maximum order of a graph admitting a weak r-code of size k."""
    if r < 0:
        raise ValueError(f"radius must be nonnegative, got r={r}")
    if k < 1:
        raise ValueError(f"code size must be positive, got k={k}")
    return k + r * (2**k - 2)


@dataclass(frozen=True)
class ExtremalInstance:
    """A graph of order w_max(r, k) together with its weak r-code."""

    r: int
    k: int
    graph: Graph
    code: tuple[int, ...]

    @property
    def tags_per_layer(self) -> int:
        return 2**self.k - 2

    def layer_vertex(self, layer: int, tag: int) -> int:
        """Vertex index for the layer-j vertex whose clique subset is the
        bitmask tag (bit i set = clique vertex i), layers 1..r, tags
        1..2^k - 2."""
        if not 1 <= layer <= self.r:
            raise ValueError(f"layer must be in 1..{self.r}, got {layer}")
        if not 1 <= tag <= self.tags_per_layer:
            raise ValueError(f"tag must be in 1..{self.tags_per_layer}, got {tag}")
        return self.k + (layer - 1) * self.tags_per_layer + (tag - 1)

    def certificate_radii(self) -> dict[int, int]:
        """The radius at which each vertex is identified: 0 on the clique,
        j on layer j."""
        radii = {v: 0 for v in range(self.k)}
        for layer in range(1, self.r + 1):
            for tag in range(1, self.tags_per_layer + 1):
                radii[self.layer_vertex(layer, tag)] = layer
        return radii

    def verify(self) -> VerificationReport:
        return check_code(self.graph, self.code, FamilySpec.weak(self.r))

    def serialize(self) -> str:
        return serialize_graph(
            self.graph,
            comments=(
                f"extremal graph for weak codes: r={self.r} k={self.k}"
                f" order={self.graph.n}",
                f"code: {' '.join(str(v) for v in self.code)}",
            ),
        )


def build_extremal(r: int, k: int) -> ExtremalInstance:
    """The order-w_max(r, k) graph: k-clique plus r layers of tagged
    vertices, one tentacle path per nonempty proper clique subset."""
    n = w_max(r, k)
    tags = 2**k - 2

    def layer_vertex(layer: int, tag: int) -> int:
        return k + (layer - 1) * tags + (tag - 1)

    edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
    for tag in range(1, tags + 1):
        for i in range(k):
            if tag >> i & 1:
                edges.append((i, layer_vertex(1, tag)))
        for layer in range(2, r + 1):
            edges.append((layer_vertex(layer - 1, tag), layer_vertex(layer, tag)))
    graph = from_edges(n, edges, label=f"extremal:r={r},k={k}")
    return ExtremalInstance(r, k, graph, tuple(range(k)))
