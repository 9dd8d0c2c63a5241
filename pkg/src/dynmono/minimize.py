"""Shrinking dynamos down to the degree-sequence bound, and exact minimums.

The greedy shrink starts from the full vertex set and repeatedly drops a
vertex whose removal provably keeps the set a dynamo.  With the current
monopoly M, the outside splits into the undersupplied vertices (at most
tau(v) neighbors inside M) and the oversupplied ones (strictly more): an
oversupplied vertex still activates after any single removal from M, so a
member v of M may be dropped once its undersupplied neighborhood is small
enough, |N(v) about undersupplied| <= deg(v) - tau(v).  When no member can
be dropped, the survivor count is at most the largest k whose k smallest
degree-plus-one values sum to at most n times the mean threshold.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from ._bits import bits_of, mask_of, set_of
from .bounds import upper_bound_degree_sequence
from .dynamics import _closure_mask, is_dynamo
from .errors import BudgetExceededError
from .graphs import Graph
from .thresholds import ThresholdAssignment, threshold_stats


@dataclass(frozen=True)
class ShrinkState:
    """One step of the greedy shrink: the monopoly and the outside split.

    ``undersupplied`` holds the outside vertices with at most tau(v)
    neighbors in the monopoly, ``oversupplied`` the rest; the three sets
    partition the vertices and the monopoly is a dynamo at every step.
    """

    monopoly: frozenset[int]
    undersupplied: frozenset[int]
    oversupplied: frozenset[int]


def _split_outside(g: Graph, tau: ThresholdAssignment, m_mask: int) -> tuple[int, int]:
    masks = g.neighbor_masks
    full = (1 << g.n) - 1
    under = 0
    over = 0
    for v in bits_of(full & ~m_mask):
        if (masks[v] & m_mask).bit_count() <= tau.values[v]:
            under |= 1 << v
        else:
            over |= 1 << v
    return under, over


def shrink_states(g: Graph, tau: ThresholdAssignment) -> Iterator[ShrinkState]:
    """Yield the state before each removal and the final irreducible state.

    The scan runs over monopoly members in ascending order and restarts
    from the smallest index after every removal, with the outside split
    recomputed from scratch.
    """
    tau.check_length(g)
    masks = g.neighbor_masks
    values = tau.values
    degrees = g.degrees
    m_mask = (1 << g.n) - 1
    while True:
        under, over = _split_outside(g, tau, m_mask)
        yield ShrinkState(set_of(m_mask), set_of(under), set_of(over))
        removable = -1
        for v in bits_of(m_mask):
            if (masks[v] & under).bit_count() <= degrees[v] - values[v]:
                removable = v
                break
        if removable < 0:
            return
        m_mask &= ~(1 << removable)


def greedy_shrink(g: Graph, tau: ThresholdAssignment) -> frozenset[int]:
    """Shrink the full vertex set to a dynamo meeting the degree-sequence bound.

    The result is propagation-verified.  Vertices with tau(v) > deg(v) never
    satisfy the removal condition and therefore stay in the monopoly.
    """
    state = None
    for state in shrink_states(g, tau):
        pass
    assert state is not None
    if not is_dynamo(g, tau, state.monopoly):
        raise AssertionError("greedy shrink produced a non-dynamo")
    return state.monopoly


def is_minimal(g: Graph, tau: ThresholdAssignment, monopoly: frozenset[int]) -> bool:
    """True iff no single-vertex removal leaves a dynamo.

    By monotonicity of activation this is equivalent to no proper subset
    being a dynamo.  Raises when ``monopoly`` is not a dynamo itself.
    """
    monopoly = frozenset(monopoly)
    if not is_dynamo(g, tau, monopoly):
        raise ValueError("the given set is not a dynamo")
    return not any(is_dynamo(g, tau, monopoly - {v}) for v in monopoly)


def exact_min_dynamo(
    g: Graph, tau: ThresholdAssignment, budget: int | None = None
) -> frozenset[int]:
    """A minimum-cardinality dynamo by ascending subset enumeration.

    Vertices with tau(v) > deg(v) can never be activated, so they are pinned
    into every candidate.  Enumeration stops at the degree-sequence bound,
    which every minimal dynamo satisfies.  ``budget`` caps the number of
    closure computations; exceeding it raises rather than guessing.
    """
    tau.check_length(g)
    values = tau.values
    full = (1 << g.n) - 1
    forced = [v for v in range(g.n) if values[v] > g.degree(v)]
    free = [v for v in range(g.n) if values[v] <= g.degree(v)]
    forced_mask = mask_of(forced)
    if g.n == 0:
        return frozenset()
    mean = threshold_stats(g, tau).mean
    cutoff = upper_bound_degree_sequence(g, mean)
    work = 0
    for size in range(len(forced), cutoff + 1):
        for extra in combinations(free, size - len(forced)):
            work += 1
            if budget is not None and work > budget:
                raise BudgetExceededError(
                    f"exact search exceeded its budget of {budget} closures"
                )
            seed_mask = forced_mask | mask_of(extra)
            if _closure_mask(g, values, seed_mask) == full:
                return set_of(seed_mask)
    raise AssertionError(
        "no dynamo found within the degree-sequence bound; this cannot happen"
    )
