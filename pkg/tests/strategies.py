"""Hypothesis strategies for small graphs and threshold assignments."""

from __future__ import annotations

from hypothesis import strategies as st

from dynmono import Graph, ThresholdAssignment


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not pairs:
        return Graph.from_edges(n, [])
    edges = draw(st.lists(st.sampled_from(pairs), unique=True))
    return Graph.from_edges(n, edges)


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    edges = {
        tuple(sorted((draw(st.integers(0, v - 1)), v))) for v in range(1, n)
    }
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if pairs:
        edges.update(draw(st.lists(st.sampled_from(pairs), unique=True)))
    return Graph.from_edges(n, sorted(edges))


@st.composite
def graphs_with_thresholds(draw, min_n: int = 1, max_n: int = 8, connected: bool = False):
    g = draw(connected_graphs(min_n, max_n) if connected else graphs(min_n, max_n))
    tau = ThresholdAssignment(
        tuple(draw(st.integers(0, d)) for d in g.degrees)
    )
    return g, tau
