"""Graph corpora for the audit harness and the test suite.

Random generation is driven entirely by a caller-supplied random.Random
(Mersenne Twister), so corpora are reproducible across platforms.  The
exhaustive generators are desk-scale: all labeled graphs up to n around 6,
all connected regular graphs up to isomorphism for n around 10.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

import networkx as nx

from ._bits import bits_of
from .graphs import Graph
from .thresholds import ThresholdAssignment


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    """Labeled random graph; edge probability drawn from rng when omitted."""
    if p is None:
        p = rng.random()
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def random_tree(rng: random.Random, n: int) -> Graph:
    """Random attachment tree: vertex v > 0 hangs off a uniform earlier vertex."""
    return Graph.from_edges(n, ((rng.randrange(v), v) for v in range(1, n)))


def random_connected_graph(
    rng: random.Random, n: int, extra_p: float | None = None
) -> Graph:
    """Random connected graph: a random tree plus independent extra edges."""
    if n <= 0:
        raise ValueError("n must be positive")
    if extra_p is None:
        extra_p = rng.random() * 0.5
    tree_edges = {(rng.randrange(v), v) for v in range(1, n)}
    edges = set(tree_edges)
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < extra_p:
                edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


def random_respecting_thresholds(rng: random.Random, g: Graph) -> ThresholdAssignment:
    """Uniform tau(v) in [0, deg(v)] per vertex."""
    return ThresholdAssignment(tuple(rng.randint(0, d) for d in g.degrees))


def labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on vertices 0..n-1 (2^(n choose 2) of them)."""
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(
            n, (pairs[i] for i in range(len(pairs)) if bits >> i & 1)
        )


# ---------------------------------------------------------------------------
# Exhaustive connected regular graphs up to isomorphism


def _to_nx(g: Graph) -> "nx.Graph":
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges())
    return out


def _iso_invariant(g: Graph) -> tuple:
    """Cheap isomorphism-invariant key used to bucket candidates."""
    masks = g.neighbor_masks
    triangles = []
    for v in range(g.n):
        cnt = sum((masks[u] & masks[v]).bit_count() for u in g.adjacency[v])
        triangles.append(cnt // 2)
    profiles = []
    for s in range(g.n):
        dist = {s: 0}
        frontier = [s]
        while frontier:
            nxt = []
            for v in frontier:
                for u in g.adjacency[v]:
                    if u not in dist:
                        dist[u] = dist[v] + 1
                        nxt.append(u)
            frontier = nxt
        profiles.append(tuple(sorted(dist.values())))
    return (
        g.n,
        g.edge_count,
        tuple(sorted(triangles)),
        tuple(sorted(profiles)),
    )


def _count_vectors(limits: list[int], total: int) -> Iterator[tuple[int, ...]]:
    """All ways to split ``total`` across groups with the given capacities."""
    if not limits:
        if total == 0:
            yield ()
        return
    head = limits[0]
    rest = limits[1:]
    capacity = sum(rest)
    for k in range(max(0, total - capacity), min(head, total) + 1):
        for tail in _count_vectors(rest, total - k):
            yield (k, *tail)


def connected_regular_graphs(n: int, degree: int) -> list[Graph]:
    """All connected degree-regular graphs on n vertices, one per
    isomorphism class.

    Backtracking completes vertices in ascending order; candidates with an
    identical adjacency history are interchangeable, so only prefix choices
    within each such group are explored.  Survivors are deduplicated by an
    invariant key plus an exact isomorphism test.
    """
    if n < 1 or degree < 0:
        raise ValueError("need n >= 1 and degree >= 0")
    if degree >= n or (n * degree) % 2 == 1:
        return []
    if degree == 0:
        return [Graph.from_edges(1, [])] if n == 1 else []

    adj = [0] * n
    deg = [0] * n
    found: list[Graph] = []
    buckets: dict[tuple, list[nx.Graph]] = {}

    def sealed_prune() -> bool:
        # the component of vertex 0: once every member is complete while
        # other vertices remain, connectivity is unreachable
        seen = 1
        stack = [0]
        size = 1
        while stack:
            v = stack.pop()
            for u in bits_of(adj[v] & ~seen):
                seen |= 1 << u
                size += 1
                stack.append(u)
        if size == n:
            return False
        return all(deg[v] == degree for v in bits_of(seen))

    def register() -> None:
        g = Graph.from_edges(
            n, ((u, v) for u in range(n) for v in bits_of(adj[u]) if v > u)
        )
        key = _iso_invariant(g)
        candidates = buckets.setdefault(key, [])
        gx = _to_nx(g)
        if any(nx.is_isomorphic(gx, seen) for seen in candidates):
            return
        candidates.append(gx)
        found.append(g)

    def rec(u: int) -> None:
        while u < n and deg[u] == degree:
            u += 1
        if u == n:
            register()  # sealed_prune already enforced connectivity
            return
        need = degree - deg[u]
        cands = [
            w for w in range(u + 1, n) if deg[w] < degree and not adj[u] >> w & 1
        ]
        if len(cands) < need:
            return
        groups: dict[int, list[int]] = {}
        for w in cands:
            groups.setdefault(adj[w], []).append(w)
        group_list = sorted(groups.values(), key=lambda ws: ws[0])
        limits = [len(ws) for ws in group_list]
        for vector in _count_vectors(limits, need):
            chosen = [w for ws, k in zip(group_list, vector) for w in ws[:k]]
            for w in chosen:
                adj[u] |= 1 << w
                adj[w] |= 1 << u
                deg[u] += 1
                deg[w] += 1
            if not sealed_prune():
                rec(u + 1)
            for w in chosen:
                adj[u] &= ~(1 << w)
                adj[w] &= ~(1 << u)
                deg[u] -= 1
                deg[w] -= 1

    rec(0)
    return found
