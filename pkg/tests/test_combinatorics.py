from __future__ import annotations

import random

import pytest
from hypothesis import given, settings

from dynmono import (
    Graph,
    Matching,
    VertexCover,
    chromatic_number,
    complete_graph,
    cycle_graph,
    independence_number,
    matching_number,
    maximum_matching,
    minimum_vertex_cover,
    path_graph,
    star_graph,
    vertex_cover_number,
)

import oracles
from strategies import graphs


class TestMatching:
    def test_path(self):
        m = maximum_matching(path_graph(4))
        m.validate(path_graph(4))
        assert len(m) == 2

    def test_cycle_five(self):
        assert matching_number(cycle_graph(5)) == 2

    def test_petersen(self, petersen):
        # brute-force oracle confirms the frozen value
        assert oracles.matching_size(10, list(petersen.edges())) == 5
        assert matching_number(petersen) == 5

    def test_matching_validation_rejects_shared_vertex(self):
        g = path_graph(3)
        with pytest.raises(ValueError):
            Matching(frozenset({(0, 1), (1, 2)})).validate(g)

    def test_matching_validation_rejects_non_edge(self):
        g = path_graph(3)
        with pytest.raises(ValueError):
            Matching(frozenset({(0, 2)})).validate(g)

    @settings(deadline=None)
    @given(graphs(max_n=9))
    def test_agrees_with_oracle(self, g):
        assert matching_number(g) == oracles.matching_size(g.n, list(g.edges()))


class TestVertexCover:
    def test_cycle_five(self):
        cover = minimum_vertex_cover(cycle_graph(5))
        cover.validate(cycle_graph(5))
        assert len(cover) == oracles.cover_size(5, list(cycle_graph(5).edges())) == 3

    def test_star_center(self):
        assert minimum_vertex_cover(star_graph(4)).vertices == {0}

    def test_complete(self):
        assert vertex_cover_number(complete_graph(5)) == 4

    def test_cover_validation(self):
        g = path_graph(3)
        with pytest.raises(ValueError):
            VertexCover(frozenset({0})).validate(g)

    @settings(deadline=None)
    @given(graphs(max_n=9))
    def test_agrees_with_oracle(self, g):
        assert vertex_cover_number(g) == oracles.cover_size(g.n, list(g.edges()))

    @given(graphs())
    def test_alpha_beta_partition(self, g):
        cover = minimum_vertex_cover(g)
        rest = set(range(g.n)) - cover.vertices
        # the complement of a cover is independent
        for u in rest:
            assert not set(g.neighbors(u)) & rest
        assert independence_number(g) + len(cover) == g.n


class TestChromatic:
    @pytest.mark.parametrize(
        "g,expected",
        [
            (cycle_graph(5), 3),
            (complete_graph(4), 4),
            (path_graph(4), 2),
            (Graph.from_edges(3, []), 1),
            (Graph.from_edges(0, []), 0),
        ],
    )
    def test_known_values(self, g, expected):
        assert chromatic_number(g) == expected

    def test_petersen(self, petersen):
        assert chromatic_number(petersen) == 3

    @settings(deadline=None, max_examples=40)
    @given(graphs(max_n=5))
    def test_agrees_with_oracle(self, g):
        assert chromatic_number(g) == oracles.chromatic(g.n, list(g.edges()))


class TestCrossInvariants:
    def test_random_corpus(self):
        rng = random.Random(9)
        for _ in range(150):
            n = rng.randint(1, 9)
            g = Graph.from_edges(
                n,
                [
                    (u, v)
                    for u in range(n)
                    for v in range(u + 1, n)
                    if rng.random() < rng.random()
                ],
            )
            alpha_prime = matching_number(g)
            beta = vertex_cover_number(g)
            assert alpha_prime <= beta
            if n <= 6:
                chi = chromatic_number(g)
                assert g.n <= independence_number(g) * chi or g.n == 0
