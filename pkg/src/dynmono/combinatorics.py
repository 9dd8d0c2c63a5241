"""Exact classical invariants: matching number, vertex cover, chromatic number.

These are the heavy ingredients of the upper bounds.  Everything here is
exact; the vertex cover and chromatic routines are exponential in the worst
case and intended for desk-scale instances (n up to roughly 40 sparse for
covers, 20 for colorings).
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from ._bits import bits_of, set_of
from .graphs import Graph


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges, each stored as (u, v), u < v."""

    edges: frozenset[tuple[int, int]]

    def __len__(self) -> int:
        return len(self.edges)

    def vertices(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)

    def validate(self, g: Graph) -> None:
        seen: set[int] = set()
        for u, v in self.edges:
            if not g.has_edge(u, v):
                raise ValueError(f"({u}, {v}) is not an edge of the graph")
            if u in seen or v in seen:
                raise ValueError(f"matching edges share vertex at ({u}, {v})")
            seen.update((u, v))


@dataclass(frozen=True)
class VertexCover:
    """A vertex set touching every edge of its graph."""

    vertices: frozenset[int]

    def __len__(self) -> int:
        return len(self.vertices)

    def validate(self, g: Graph) -> None:
        for u, v in g.edges():
            if u not in self.vertices and v not in self.vertices:
                raise ValueError(f"edge ({u}, {v}) is uncovered")


def maximum_matching(g: Graph) -> Matching:
    """A maximum-cardinality matching, exact on general graphs.

    Backed by networkx's blossom-based max_weight_matching with unit
    weights; the result is validated before it is returned.
    """
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    mate = nx.max_weight_matching(nxg, maxcardinality=True)
    matching = Matching(frozenset((min(u, v), max(u, v)) for u, v in mate))
    matching.validate(g)
    return matching


def matching_number(g: Graph) -> int:
    return len(maximum_matching(g))


def minimum_vertex_cover(g: Graph) -> VertexCover:
    """A minimum-cardinality vertex cover via branch and bound.

    Branches on a highest-degree uncovered vertex: either it joins the
    cover, or all of its uncovered neighbors must.  A greedy matching on
    the uncovered edges prunes (each matching edge forces one cover vertex).
    """
    masks = g.neighbor_masks
    full = (1 << g.n) - 1

    def uncovered_vertex(cover: int) -> int:
        best_v, best_deg = -1, 0
        rest = full & ~cover
        for v in bits_of(rest):
            d = (masks[v] & rest).bit_count()
            if d > best_deg:
                best_v, best_deg = v, d
        return best_v  # -1 when no uncovered edge remains

    def matching_lower_bound(cover: int) -> int:
        rest = full & ~cover
        used = 0
        count = 0
        for v in bits_of(rest):
            if used >> v & 1:
                continue
            free = masks[v] & rest & ~used
            if free:
                used |= (free & -free) | (1 << v)
                count += 1
        return count

    best_mask = full
    best_size = g.n

    def search(cover: int, size: int) -> None:
        nonlocal best_mask, best_size
        if size + matching_lower_bound(cover) >= best_size:
            return
        v = uncovered_vertex(cover)
        if v < 0:
            best_mask, best_size = cover, size
            return
        nbrs = masks[v] & ~cover
        # exclude v: every uncovered neighbor joins the cover
        search(cover | nbrs, size + nbrs.bit_count())
        # include v
        search(cover | 1 << v, size + 1)

    search(0, 0)
    cover = VertexCover(set_of(best_mask))
    cover.validate(g)
    return cover


def vertex_cover_number(g: Graph) -> int:
    return len(minimum_vertex_cover(g))


def independence_number(g: Graph) -> int:
    """alpha(G) = n - beta(G); the cover complement is a maximum independent set."""
    return g.n - vertex_cover_number(g)


def chromatic_number(g: Graph) -> int:
    """Smallest k admitting a proper k-coloring (iterative deepening search)."""
    if g.n == 0:
        return 0
    if g.edge_count == 0:
        return 1
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    masks = g.neighbor_masks

    def colorable(k: int) -> bool:
        colors = [-1] * g.n

        def place(i: int, used: int) -> bool:
            if i == len(order):
                return True
            v = order[i]
            seen: set[int] = set()
            for u in bits_of(masks[v]):
                if colors[u] >= 0:
                    seen.add(colors[u])
            # trying one fresh color is enough; higher fresh colors are symmetric
            limit = min(k, used + 1)
            for c in range(limit):
                if c in seen:
                    continue
                colors[v] = c
                if place(i + 1, max(used, c + 1)):
                    return True
                colors[v] = -1
            return False

        return place(0, 0)

    for k in range(2, g.n + 1):
        if colorable(k):
            return k
    return g.n
