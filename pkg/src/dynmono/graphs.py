"""Simple undirected graphs: data model, text format, generators, statistics.

Vertices are contiguous 0-based ids.  All values are immutable after
construction and every function here is pure, so concurrent use is safe.

Text format (UTF-8): lines starting with ``#`` and blank lines are ignored;
the first data line is ``n m``; exactly ``m`` data lines ``u v`` follow with
``0 <= u < v < n`` and no duplicate edges.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import GraphFormatError


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with ascending adjacency lists.

    Invariants (enforced at construction): no self-loops, no duplicate
    neighbors, symmetric adjacency, all ids in ``[0, n)``.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.adjacency) != self.n:
            raise ValueError("adjacency length differs from vertex count")
        for v, nbrs in enumerate(self.adjacency):
            prev = -1
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise ValueError(f"neighbor {u} of {v} out of range")
                if u == v:
                    raise ValueError(f"self-loop at vertex {v}")
                if u <= prev:
                    raise ValueError(f"adjacency of {v} not strictly ascending")
                prev = u
        for v, nbrs in enumerate(self.adjacency):
            for u in nbrs:
                if v not in self.adjacency[u]:
                    raise ValueError(f"asymmetric adjacency: {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range")
            if v in nbrs[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adjacency)

    @cached_property
    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (u, v) with u < v, in ascending order."""
        for u in range(self.n):
            for v in self.adjacency[u]:
                if u < v:
                    yield u, v

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """Adjacency of each vertex as a bitmask (internal fast path)."""
        return tuple(sum(1 << u for u in nbrs) for nbrs in self.adjacency)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)


def degree_sequence(g: Graph) -> tuple[int, ...]:
    """Degrees in non-decreasing order."""
    return tuple(sorted(g.degrees))


def edge_density(g: Graph) -> Fraction:
    """Edges per vertex, |E|/n, as an exact rational.

    Note this is the edges-per-vertex density, not the edges-per-pair one.
    """
    if g.n == 0:
        raise ValueError("edge density undefined for the empty graph")
    return Fraction(g.edge_count, g.n)


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components, sorted by smallest member."""
    seen = [False] * g.n
    out: list[frozenset[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        stack = [start]
        comp = [start]
        while stack:
            v = stack.pop()
            for u in g.adjacency[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    stack.append(u)
        out.append(frozenset(comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def induced_degree(g: Graph, v: int, inside: frozenset[int] | set[int]) -> int:
    return sum(1 for u in g.adjacency[v] if u in inside)


# ---------------------------------------------------------------------------
# Text format


def parse_graph(text: str) -> Graph:
    """Parse the edge-list document format into a Graph.

    Raises GraphFormatError on malformed header, out-of-range ids,
    duplicate edges, self-loops, reversed endpoints or edge count mismatch.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    data = [ln for ln in lines if ln and not ln.startswith("#")]
    if not data:
        raise GraphFormatError("missing 'n m' header line")
    header = data[0].split()
    if len(header) != 2:
        raise GraphFormatError(f"malformed header {data[0]!r}, expected 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise GraphFormatError(f"malformed header {data[0]!r}") from exc
    if n < 0 or m < 0:
        raise GraphFormatError("header counts must be non-negative")
    if len(data) - 1 != m:
        raise GraphFormatError(
            f"edge count mismatch: header says {m}, found {len(data) - 1} edge lines"
        )
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for ln in data[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"malformed edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphFormatError(f"malformed edge line {ln!r}") from exc
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex id out of range in edge ({u}, {v})")
        if u > v:
            raise GraphFormatError(f"edge ({u}, {v}) must be written with u < v")
        if (u, v) in seen:
            raise GraphFormatError(f"duplicate edge ({u}, {v})")
        seen.add((u, v))
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def render_graph(g: Graph) -> str:
    """Render a Graph in the text format; inverse of parse_graph."""
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Generators


def complete_graph(n: int) -> Graph:
    if n < 0:
        raise ValueError("n must be non-negative")
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def path_graph(n: int) -> Graph:
    if n < 0:
        raise ValueError("n must be non-negative")
    return Graph.from_edges(n, ((v, v + 1) for v in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)] + [(0, n - 1)])


def star_graph(k: int) -> Graph:
    """Star with k leaves attached to center 0 (k + 1 vertices)."""
    if k < 0:
        raise ValueError("leaf count must be non-negative")
    return Graph.from_edges(k + 1, ((0, v) for v in range(1, k + 1)))


def circulant_graph(n: int, offsets: Sequence[int]) -> Graph:
    """Circulant graph: v is adjacent to v +- s (mod n) for each offset s."""
    if n < 1:
        raise ValueError("n must be positive")
    for s in offsets:
        if not 1 <= s <= n // 2:
            raise ValueError(f"offset {s} outside [1, n/2]")
    edges = {tuple(sorted((v, (v + s) % n))) for v in range(n) for s in offsets}
    return Graph.from_edges(n, sorted(edges))


def gnp_graph(n: int, p: float, seed: int) -> Graph:
    """Seeded Erdos-Renyi graph; identical output for identical (n, p, seed)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = random.Random(seed)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def gn_graph(n: int) -> Graph:
    """Extremal family: a central clique joined completely to many small cliques.

    Vertices 0 .. n(n-1)-1 form the central clique on n(n-1) vertices; then
    n(n-1)-1 disjoint cliques on n vertices follow in consecutive blocks,
    every vertex of every block adjacent to every central vertex.  Total
    vertex count is n(n-1) + n*[n(n-1)-1] and the edge count works out to
    (n^3 - n) * (n^2 - n - 1).
    """
    if n < 2:
        raise ValueError("the family requires n >= 2")
    core = n * (n - 1)
    copies = core - 1
    total = core + n * copies
    edges: list[tuple[int, int]] = []
    edges.extend((u, v) for u in range(core) for v in range(u + 1, core))
    for c in range(copies):
        base = core + c * n
        block = range(base, base + n)
        edges.extend((u, v) for u in block for v in block if u < v)
        edges.extend((w, u) for u in block for w in range(core))
    return Graph.from_edges(total, edges)


def gn_central_count(n: int) -> int:
    """Number of central-clique vertices in gn_graph(n)."""
    if n < 2:
        raise ValueError("the family requires n >= 2")
    return n * (n - 1)


GENERATOR_FAMILIES = (
    "complete",
    "path",
    "cycle",
    "star",
    "circulant",
    "gnp",
    "gn",
)


def generate(family: str, **params) -> Graph:
    """Dispatch to a named generator family (CLI surface).

    Families and parameters: complete(n), path(n), cycle(n), star(k),
    circulant(n, offsets), gnp(n, p, seed), gn(n).
    """
    if family == "complete":
        return complete_graph(params["n"])
    if family == "path":
        return path_graph(params["n"])
    if family == "cycle":
        return cycle_graph(params["n"])
    if family == "star":
        return star_graph(params["k"])
    if family == "circulant":
        return circulant_graph(params["n"], params["offsets"])
    if family == "gnp":
        return gnp_graph(params["n"], params["p"], params.get("seed", 0))
    if family == "gn":
        return gn_graph(params["n"])
    raise ValueError(f"unknown family {family!r}")
