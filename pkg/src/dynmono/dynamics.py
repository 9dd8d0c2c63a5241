"""The threshold activation process.

Starting from a seed set, rounds are computed greedily and simultaneously:
every inactive vertex with at least tau(v) active neighbors activates in the
next round, until a round comes up empty.  The seed is a dynamic monopoly
(dynamo) when the process activates every vertex.  Activation closure is
monotone in the seed, which is why the greedy schedule decides dynamo-ness
for every possible schedule.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from ._bits import bits_of, mask_of, set_of
from .graphs import Graph
from .thresholds import ThresholdAssignment


@dataclass(frozen=True)
class ActivationTrace:
    """Rounds of one activation run.

    ``rounds[0]`` is the seed exactly as given; every later round is
    non-empty and contains all vertices that first met their threshold at
    that step.  ``complete`` means every vertex of the graph was activated.
    """

    rounds: tuple[frozenset[int], ...]
    activated: frozenset[int]
    complete: bool

    @property
    def seed(self) -> frozenset[int]:
        return self.rounds[0]

    @property
    def total_rounds(self) -> int:
        """Number of propagation steps after the seed round."""
        return len(self.rounds) - 1

    def to_dict(self) -> dict:
        return {
            "rounds": [sorted(r) for r in self.rounds],
            "complete": self.complete,
            "seed_size": len(self.rounds[0]),
            "total_rounds": self.total_rounds,
        }


def _check_seed(g: Graph, tau: ThresholdAssignment, seed: Iterable[int]) -> frozenset[int]:
    tau.check_length(g)
    seed = frozenset(seed)
    for v in seed:
        if not 0 <= v < g.n:
            raise ValueError(f"seed vertex {v} out of range")
    return seed


def _round_masks(g: Graph, values: Sequence[int], seed_mask: int) -> Iterator[int]:
    """Yield the mask of each non-empty post-seed round in order.

    The first round scans every inactive vertex (zero-threshold vertices
    fire unconditionally there); afterwards only neighbors of the newest
    round can change status, so the scan follows the frontier.
    """
    masks = g.neighbor_masks
    full = (1 << g.n) - 1
    active = seed_mask
    frontier = -1  # sentinel: first round scans everything inactive
    while True:
        if frontier < 0:
            candidates = full & ~active
        else:
            candidates = 0
            for v in bits_of(frontier):
                candidates |= masks[v]
            candidates &= full & ~active
        new = 0
        for v in bits_of(candidates):
            if (masks[v] & active).bit_count() >= values[v]:
                new |= 1 << v
        if not new:
            return
        yield new
        active |= new
        frontier = new


def _closure_mask(g: Graph, values: Sequence[int], seed_mask: int) -> int:
    active = seed_mask
    for new in _round_masks(g, values, seed_mask):
        active |= new
    return active


def propagate(
    g: Graph, tau: ThresholdAssignment, seed: Iterable[int]
) -> ActivationTrace:
    """Run the greedy simultaneous activation process from ``seed``.

    The seed round is stored verbatim (even when empty); the process stops
    at the first empty round, so at most n non-empty rounds follow the seed.
    """
    seed = _check_seed(g, tau, seed)
    active = mask_of(seed)
    rounds: list[frozenset[int]] = [seed]
    for new in _round_masks(g, tau.values, active):
        rounds.append(set_of(new))
        active |= new
    return ActivationTrace(
        rounds=tuple(rounds),
        activated=set_of(active),
        complete=active == (1 << g.n) - 1,
    )


def is_dynamo(g: Graph, tau: ThresholdAssignment, seed: Iterable[int]) -> bool:
    """True iff the activation process from ``seed`` activates every vertex."""
    seed = _check_seed(g, tau, seed)
    full = (1 << g.n) - 1
    return _closure_mask(g, tau.values, mask_of(seed)) == full


def verify_trace(
    g: Graph,
    tau: ThresholdAssignment,
    partition: Sequence[Iterable[int]],
) -> bool:
    """Check a claimed round partition against the activation rule.

    Accepts any valid partition, not only the greedy one: the sets must be
    pairwise disjoint and every vertex in a round after the first needs at
    least tau(v) neighbors in the union of the strictly earlier sets.
    Raises on overlapping sets or unknown vertex ids; returns False when a
    threshold condition fails.
    """
    tau.check_length(g)
    masks = g.neighbor_masks
    rounds = [frozenset(r) for r in partition]
    for r in rounds:
        for v in r:
            if not 0 <= v < g.n:
                raise ValueError(f"unknown vertex id {v}")
    seen: set[int] = set()
    for r in rounds:
        overlap = seen & r
        if overlap:
            raise ValueError(f"overlapping sets: vertex {min(overlap)} repeated")
        seen |= r
    earlier = 0
    for i, r in enumerate(rounds):
        if i > 0:
            for v in r:
                if (masks[v] & earlier).bit_count() < tau.values[v]:
                    return False
        earlier |= mask_of(r)
    return True
