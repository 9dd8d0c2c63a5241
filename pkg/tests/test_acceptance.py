"""Acceptance suite: one test per criterion, each printing a PASS line.

Every expected value here is either exact arithmetic or independently
recomputed by the brute-force oracles in oracles.py; run with ``pytest -s``
to see the per-criterion summary lines.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction

from dynmono import (
    Graph,
    build_ordering,
    components,
    degree_thresholds,
    exact_min_dynamo,
    gn_graph,
    gn_thresholds,
    gnp_graph,
    greedy_shrink,
    half_dynamo,
    is_dynamo,
    kn_witness,
    lower_bound_average,
    matching_number,
    maximum_matching,
    minimum_vertex_cover,
    neighbor_balance,
    propagate,
    strict_majority_thresholds,
    threshold_stats,
    upper_bound_degree_sequence,
)
from dynmono.corpus import (
    connected_regular_graphs,
    labeled_graphs,
    random_connected_graph,
    random_graph,
    random_respecting_thresholds,
)

import oracles

SANDWICH_SEED = 20_240_001
ORDERING_SEED = 20_240_002
MATCHING_SEED = 20_240_003
ORACLE_SEED = 20_240_004


def _sandwich_corpus(count=5000):
    rng = random.Random(SANDWICH_SEED)
    for _ in range(count):
        g = random_connected_graph(rng, rng.randint(1, 7))
        yield g, random_respecting_thresholds(rng, g)


def _ordering_corpus(count=1000):
    rng = random.Random(ORDERING_SEED)
    for _ in range(count):
        yield random_connected_graph(rng, rng.randint(2, 40))


def test_acceptance_1_sandwich():
    """Average-threshold lower bound and degree-sequence upper bound bracket
    the exact minimum on 5000 random connected graphs with n <= 7."""
    started = time.perf_counter()
    checked = 0
    for g, tau in _sandwich_corpus():
        lower = lower_bound_average(g, tau)
        exact = len(exact_min_dynamo(g, tau))
        upper = upper_bound_degree_sequence(g, threshold_stats(g, tau).mean)
        assert lower <= exact <= upper, (g, tau)
        checked += 1
    elapsed = time.perf_counter() - started
    assert checked >= 5000
    assert elapsed < 300
    print(f"\nACCEPTANCE 1 sandwich: PASS ({checked} instances, {elapsed:.1f}s)")


def test_acceptance_2_ordering_construction():
    """Every ordering certificate invariant holds on 1000 random connected
    graphs with n <= 40, and both halves are strict-majority dynamos."""
    started = time.perf_counter()
    checked = 0
    for g in _ordering_corpus():
        cert = build_ordering(g)
        assert cert.balance == neighbor_balance(g, cert.order)
        assert sum(cert.balance) == 0
        assert all((cert.balance[v] - g.degree(v)) % 2 == 0 for v in range(g.n))
        assert cert.zero_count <= 1
        has_odd = any(d % 2 == 1 for d in g.degrees)
        if has_odd:
            assert cert.zero_count == 0
        signs = [cert.balance[v] for v in cert.order]
        stage = 0
        for s in signs:
            if s > 0:
                assert stage == 0
            elif s == 0:
                assert stage <= 1
                stage = 1
            else:
                stage = 2
        tau = strict_majority_thresholds(g)
        assert propagate(g, tau, cert.nonneg_half).complete
        assert propagate(g, tau, cert.nonpos_half).complete
        size = len(half_dynamo(g))
        assert size <= (g.n // 2 if has_odd else (g.n + 1) // 2)
        checked += 1
    elapsed = time.perf_counter() - started
    assert checked == 1000
    assert elapsed < 60
    print(f"ACCEPTANCE 2 ordering: PASS ({checked} certificates, {elapsed:.1f}s)")


def test_acceptance_3_greedy_shrink():
    """Greedy shrink verifies as a dynamo and meets the degree-sequence
    bound on the same corpora; n=500 smoke test under 10s; doubling n from
    250 to 500 costs at most 10x."""
    for g, tau in _sandwich_corpus(count=1000):
        result = greedy_shrink(g, tau)
        assert is_dynamo(g, tau, result)
        assert len(result) <= upper_bound_degree_sequence(g, threshold_stats(g, tau).mean)
    for g in _ordering_corpus(count=500):
        tau = strict_majority_thresholds(g)
        result = greedy_shrink(g, tau)
        assert is_dynamo(g, tau, result)
        assert len(result) <= upper_bound_degree_sequence(g, threshold_stats(g, tau).mean)

    def best_time(n: int, repeats: int = 3) -> float:
        g = gnp_graph(n, 0.05, seed=77)
        tau = strict_majority_thresholds(g)
        best = float("inf")
        for _ in range(repeats):
            start = time.perf_counter()
            result = greedy_shrink(g, tau)
            best = min(best, time.perf_counter() - start)
        assert is_dynamo(g, tau, result)
        return best

    t_small = best_time(250)
    t_large = best_time(500)
    assert t_large < 10.0
    assert t_large <= 10 * max(t_small, 0.001)
    print(
        f"ACCEPTANCE 3 greedy: PASS (1500 corpus instances; "
        f"n=500 in {t_large:.2f}s, ratio {t_large / max(t_small, 1e-9):.1f}x)"
    )


def test_acceptance_4_cover_equivalence():
    """With full-degree thresholds, a subset is a dynamo exactly when it is
    a vertex cover, for every labeled graph with n <= 6 and no isolated
    vertex; the minimum dynamo size equals the cover number."""
    started = time.perf_counter()
    graphs_checked = 0
    subsets_checked = 0
    for n in range(1, 7):
        for g in labeled_graphs(n):
            if g.n and g.min_degree == 0:
                continue
            tau = degree_thresholds(g)
            masks = g.neighbor_masks
            full = (1 << n) - 1
            for subset in range(1 << n):
                covers = all(
                    masks[v] & ~subset & full == 0
                    for v in range(n)
                    if not subset >> v & 1
                )
                dyn = is_dynamo(g, tau, [v for v in range(n) if subset >> v & 1])
                assert covers == dyn, (g, subset)
                subsets_checked += 1
            assert len(exact_min_dynamo(g, tau)) == len(minimum_vertex_cover(g))
            graphs_checked += 1
    elapsed = time.perf_counter() - started
    print(
        f"ACCEPTANCE 4 cover equivalence: PASS ({graphs_checked} graphs, "
        f"{subsets_checked} subsets, {elapsed:.1f}s)"
    )


def test_acceptance_5_complete_graph_formula():
    """On complete graphs the witness assignment's exact minimum equals the
    floor of the mean, for every admissible mean with integral n*mean."""
    checked = 0
    for n in range(3, 9):
        for numerator in range(0, n * (n - 1) + 1):
            mean = Fraction(numerator, n)
            witness = kn_witness(n, mean)
            exact = len(exact_min_dynamo(witness.graph, witness.thresholds))
            assert exact == witness.expected == numerator // n, (n, mean)
            checked += 1
    print(f"ACCEPTANCE 5 complete-graph formula: PASS ({checked} (n, mean) pairs)")


def test_acceptance_6_gn_family():
    """The extremal family: exact edge counts, minimum dynamo of the
    smallest member, and a strictly increasing dynamo-to-order ratio."""
    ratios = []
    for n in range(2, 7):
        g = gn_graph(n)
        core = n * (n - 1)
        assert g.n == core + n * (core - 1)
        assert g.edge_count == (n**3 - n) * (n**2 - n - 1)
        ratios.append(Fraction((core - 1) * (n - 1), g.n))
    assert len(exact_min_dynamo(gn_graph(2), gn_thresholds(2))) == 1
    assert ratios[0] == Fraction(1, 4)
    assert ratios[1] == Fraction(10, 21)
    for previous, current in zip(ratios, ratios[1:]):
        assert current > previous
    print(f"ACCEPTANCE 6 extremal family: PASS (ratios {[str(r) for r in ratios]})")


def test_acceptance_7_matching_bound():
    """Exact strict-majority minimum dynamo needs at most matching number
    plus component count vertices, on 2000 random graphs with n <= 10."""
    rng = random.Random(MATCHING_SEED)
    checked = 0
    for _ in range(2000):
        g = random_graph(rng, rng.randint(1, 10))
        tau = strict_majority_thresholds(g)
        exact = len(exact_min_dynamo(g, tau))
        bound = matching_number(g) + len(components(g))
        assert exact <= bound, g
        checked += 1
    print(f"ACCEPTANCE 7 matching bound: PASS ({checked} graphs)")


def test_acceptance_8_regular_corollary():
    """Every connected cubic graph with n <= 10 under strict majority needs
    at least n/6 seed vertices (exact rational comparison)."""
    class_counts = {}
    checked = 0
    for n in (4, 6, 8, 10):
        members = connected_regular_graphs(n, 3)
        class_counts[n] = len(members)
        for g in members:
            tau = strict_majority_thresholds(g)
            assert threshold_stats(g, tau).mean == 2
            exact = len(exact_min_dynamo(g, tau))
            assert Fraction(exact) >= Fraction(n, 6), g
            checked += 1
    # enumeration sanity: the known numbers of connected cubic graphs
    assert class_counts == {4: 1, 6: 2, 8: 5, 10: 19}
    print(f"ACCEPTANCE 8 regular corollary: PASS ({checked} cubic graphs)")


def test_acceptance_9_oracle_agreement():
    """Matching and vertex cover agree with independent subset-enumeration
    oracles on a 500-instance corpus with n <= 12; alpha + beta = n."""
    rng = random.Random(ORACLE_SEED)
    checked = 0
    for _ in range(500):
        g = random_graph(rng, rng.randint(1, 12))
        edges = list(g.edges())
        matching = maximum_matching(g)
        matching.validate(g)
        assert len(matching) == oracles.matching_size(g.n, edges)
        cover = minimum_vertex_cover(g)
        cover.validate(g)
        assert len(cover) == oracles.cover_size(g.n, edges)
        alpha = g.n - len(cover)
        independent = set(range(g.n)) - cover.vertices
        assert len(independent) == alpha
        for v in independent:
            assert not set(g.neighbors(v)) & independent
        checked += 1
    print(f"ACCEPTANCE 9 oracle agreement: PASS ({checked} graphs)")
