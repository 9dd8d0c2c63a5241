"""Strict-majority dynamo constructions via vertex orderings.

The central object is an ordering certificate: a vertex order together with
each vertex's neighbor balance (later neighbors minus earlier neighbors).
A connected graph always admits an order in which at most one vertex has
balance zero, positives precede zeros precede negatives, and no vertex
balances to zero at all when some vertex has odd degree.  Both the
non-negative half and the non-positive half of such an order are dynamos
under strict-majority thresholds: walking the negatives in order, each one
sees strictly more earlier than later neighbors, hence at least
ceil((deg+1)/2) active ones (and symmetrically for the positives, walked in
reverse).  The smaller half therefore never exceeds ceil(n/2) vertices, and
never exceeds n/2 when an odd-degree vertex exists.

The recursive construction removes a root (an odd-degree vertex when one
exists), orders each remaining component by induction, and lays out the
pieces as positives, zeros, root, negatives.  Each all-even component is
told to place its potential zero vertex on a neighbor of the root, which
the root's position then bumps to +1, so the root is the only vertex that
can end up at zero.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple

from .combinatorics import matching_number
from .dynamics import is_dynamo
from .errors import BudgetExceededError, ConstructionError
from .graphs import Graph, components, is_connected
from .minimize import exact_min_dynamo
from .thresholds import strict_majority_thresholds

logger = logging.getLogger(__name__)


def neighbor_balance(g: Graph, order: Iterable[int]) -> tuple[int, ...]:
    """Later-neighbor count minus earlier-neighbor count, per vertex.

    ``order`` must be a permutation of the vertices; the result is indexed
    by vertex id.  The values always sum to zero and match each degree's
    parity.
    """
    order = tuple(order)
    if sorted(order) != list(range(g.n)):
        raise ValueError("order is not a permutation of the vertices")
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    bal = [0] * g.n
    for v in range(g.n):
        for u in g.adjacency[v]:
            bal[v] += 1 if pos[u] > pos[v] else -1
    return tuple(bal)


@dataclass(frozen=True)
class OrderingCertificate:
    """A vertex order with its recomputable neighbor balances.

    ``order[i]`` is the vertex at position i; ``balance[v]`` is indexed by
    vertex id.
    """

    order: tuple[int, ...]
    balance: tuple[int, ...]

    @classmethod
    def from_order(cls, g: Graph, order: Iterable[int]) -> "OrderingCertificate":
        order = tuple(order)
        return cls(order=order, balance=neighbor_balance(g, order))

    @property
    def zero_count(self) -> int:
        return sum(1 for b in self.balance if b == 0)

    @property
    def zero_vertex(self) -> int | None:
        for v, b in enumerate(self.balance):
            if b == 0:
                return v
        return None

    @property
    def nonneg_half(self) -> frozenset[int]:
        return frozenset(v for v, b in enumerate(self.balance) if b >= 0)

    @property
    def nonpos_half(self) -> frozenset[int]:
        return frozenset(v for v, b in enumerate(self.balance) if b <= 0)

    def validate(self, g: Graph) -> None:
        """Check every structural invariant against the graph."""
        recomputed = neighbor_balance(g, self.order)
        if recomputed != self.balance:
            raise ValueError("stored balances disagree with the order")
        if sum(self.balance) != 0:
            raise ValueError("balances do not sum to zero")
        for v, b in enumerate(self.balance):
            if (b - g.degree(v)) % 2 != 0:
                raise ValueError(f"balance parity differs from degree at {v}")
        if self.zero_count > 1:
            raise ValueError("more than one vertex balances to zero")
        signs = [self.balance[v] for v in self.order]
        # positives form a prefix, then zeros, then negatives
        stage = 0
        for s in signs:
            if s > 0:
                if stage > 0:
                    raise ValueError("a positive vertex appears after a non-positive one")
            elif s == 0:
                if stage > 1:
                    raise ValueError("a zero vertex appears after a negative one")
                stage = 1
            else:
                stage = 2

    def to_dict(self) -> dict:
        """Serialize with balances aligned positionally with the order list."""
        return {
            "order": list(self.order),
            "balance": [self.balance[v] for v in self.order],
            "zero_count": self.zero_count,
            "has_odd_degree_vertex": any(b % 2 != 0 for b in self.balance),
        }


def _components_within(g: Graph, verts: set[int]) -> list[set[int]]:
    out: list[set[int]] = []
    left = set(verts)
    while left:
        start = min(left)
        comp = {start}
        stack = [start]
        left.discard(start)
        while stack:
            v = stack.pop()
            for u in g.adjacency[v]:
                if u in left:
                    left.discard(u)
                    comp.add(u)
                    stack.append(u)
        out.append(comp)
    out.sort(key=min)
    return out


class _Frame:
    __slots__ = ("verts", "designated", "root", "pending", "child_orders")

    def __init__(self, verts: set[int], designated: int | None):
        self.verts: set[int] | None = verts
        self.designated = designated
        self.root = -1
        self.pending: list["_Frame"] | None = None
        self.child_orders: list[list[int]] = []


def _order_connected(
    g: Graph,
    verts: set[int],
    designated: int | None,
    forced_root: int | None = None,
) -> list[int]:
    """Order a connected vertex set; iterative to survive deep peelings.

    Root selection: the smallest odd-degree vertex (degrees induced on the
    set), else the designated vertex, else the smallest vertex.  The zero
    vertex of an all-even component is routed onto a neighbor of the root so
    the root's later position cancels it.
    """
    adj = g.adjacency
    top = _Frame(verts, designated)
    stack = [top]
    result: list[int] = []
    while stack:
        fr = stack[-1]
        if fr.pending is None:
            vs = fr.verts
            assert vs is not None
            odd = [v for v in vs if sum(1 for u in adj[v] if u in vs) % 2 == 1]
            if fr is top and forced_root is not None:
                root = forced_root
            elif odd:
                root = min(odd)
            elif fr.designated is not None:
                root = fr.designated
            else:
                root = min(vs)
            fr.root = root
            children: list[_Frame] = []
            for comp in _components_within(g, vs - {root}):
                child_des = None
                all_even = all(
                    sum(1 for u in adj[v] if u in comp) % 2 == 0 for v in comp
                )
                if all_even:
                    child_des = min(u for u in adj[root] if u in comp)
                children.append(_Frame(comp, child_des))
            fr.pending = children[::-1]
            fr.verts = None
        if fr.pending:
            stack.append(fr.pending.pop())
            continue
        stack.pop()
        positives: list[int] = []
        zeros: list[int] = []
        negatives: list[int] = []
        for child in fr.child_orders:
            inside = set(child)
            pos = {v: i for i, v in enumerate(child)}
            for v in child:
                bal = 0
                for u in adj[v]:
                    if u in inside:
                        bal += 1 if pos[u] > pos[v] else -1
                if bal > 0:
                    positives.append(v)
                elif bal < 0:
                    negatives.append(v)
                else:
                    zeros.append(v)
        order = positives + zeros + [fr.root] + negatives
        if stack:
            stack[-1].child_orders.append(order)
        else:
            result = order
    return result


def build_ordering(g: Graph, designated: int | None = None) -> OrderingCertificate:
    """Build a certified ordering of a connected graph.

    If the graph has an odd-degree vertex, no balance is zero.  Otherwise at
    most one balance is zero, and when ``designated`` is supplied the zero
    vertex (if any) is the designated one.
    """
    if g.n == 0:
        raise ValueError("ordering undefined for the empty graph")
    if not is_connected(g):
        raise ValueError("graph must be connected")
    if designated is not None and not 0 <= designated < g.n:
        raise ValueError(f"designated vertex {designated} out of range")
    order = _order_connected(g, set(range(g.n)), designated)
    cert = OrderingCertificate.from_order(g, order)
    cert.validate(g)
    has_odd = any(d % 2 == 1 for d in g.degrees)
    if has_odd and cert.zero_count:
        raise ConstructionError("zero balance despite an odd-degree vertex")
    if not has_odd and cert.zero_count:
        expected = designated if designated is not None else min(range(g.n))
        if cert.zero_vertex != expected:
            raise ConstructionError("zero balance landed off the chosen root")
    return cert


def _halves_of(g: Graph, order: list[int], inside: set[int]) -> tuple[set[int], set[int], int]:
    """Non-negative half, non-positive half and zero count, within a component."""
    pos = {v: i for i, v in enumerate(order)}
    nonneg: set[int] = set()
    nonpos: set[int] = set()
    zeros = 0
    for v in order:
        bal = 0
        for u in g.adjacency[v]:
            if u in inside:
                bal += 1 if pos[u] > pos[v] else -1
        if bal >= 0:
            nonneg.add(v)
        if bal <= 0:
            nonpos.add(v)
        if bal == 0:
            zeros += 1
    return nonneg, nonpos, zeros


def ordering_documents(g: Graph) -> list[dict]:
    """One serialized ordering certificate per connected component.

    Each document carries the component's vertex order, the balances
    aligned with that order, the zero count and the odd-degree flag; on a
    connected graph the single document equals build_ordering(g).to_dict().
    """
    docs: list[dict] = []
    for comp in components(g):
        comp_set = set(comp)
        order = _order_connected(g, set(comp_set), None)
        pos = {v: i for i, v in enumerate(order)}
        balances = []
        for v in order:
            bal = sum(
                1 if pos[u] > pos[v] else -1
                for u in g.adjacency[v]
                if u in comp_set
            )
            balances.append(bal)
        docs.append(
            {
                "order": order,
                "balance": balances,
                "zero_count": sum(1 for b in balances if b == 0),
                "has_odd_degree_vertex": any(b % 2 != 0 for b in balances),
            }
        )
    return docs


def half_dynamo(g: Graph) -> frozenset[int]:
    """A strict-majority dynamo from the smaller half of an ordering.

    Connected graphs get at most ceil(n/2) vertices, and at most n/2 when an
    odd-degree vertex exists.  Disconnected input is handled per component,
    so the guarantee becomes the sum of the per-component ones.  The result
    is verified by propagation before it is returned.
    """
    chosen: set[int] = set()
    for comp in components(g):
        comp_set = set(comp)
        order = _order_connected(g, set(comp_set), None)
        nonneg, nonpos, _ = _halves_of(g, order, comp_set)
        chosen |= nonpos if len(nonpos) < len(nonneg) else nonneg
    if not is_dynamo(g, strict_majority_thresholds(g), chosen):
        raise ConstructionError("half set failed propagation check")
    return frozenset(chosen)


def dynamo_containing(
    g: Graph, vertex: int, budget: int | None = None
) -> frozenset[int]:
    """A strict-majority dynamo of size at most n/2 containing ``vertex``.

    Requires a connected graph on an even number of vertices.  Tries
    ordering certificates first (designating ``vertex`` when all degrees are
    even, otherwise rooting at ``vertex`` and at each odd-degree vertex); a
    half that misses ``vertex`` but is strictly smaller than n/2 is extended
    by ``vertex``, which keeps it a dynamo by monotonicity.  A budgeted
    exhaustive search remains as a last resort and a failure there raises,
    so the result is never silently wrong.
    """
    if not 0 <= vertex < g.n:
        raise ValueError(f"vertex {vertex} out of range")
    if g.n % 2 != 0:
        raise ValueError("graph order must be even")
    if not is_connected(g):
        raise ValueError("graph must be connected")
    tau = strict_majority_thresholds(g)
    half = g.n // 2
    everything = set(range(g.n))
    odd_vertices = [v for v in range(g.n) if g.degree(v) % 2 == 1]

    attempts: list[tuple[int | None, int | None]] = []  # (designated, forced_root)
    if not odd_vertices:
        attempts.append((vertex, None))
    else:
        attempts.append((None, vertex))
        attempts.extend((None, o) for o in odd_vertices)

    for designated, root in attempts:
        order = _order_connected(g, set(everything), designated, forced_root=root)
        nonneg, nonpos, zeros = _halves_of(g, order, everything)
        for candidate in (nonneg, nonpos):
            if len(candidate) <= half and vertex in candidate and is_dynamo(g, tau, candidate):
                return frozenset(candidate)
        if zeros == 0:
            smaller = nonpos if len(nonpos) < len(nonneg) else nonneg
            if len(smaller) < half and is_dynamo(g, tau, smaller):
                extended = frozenset(smaller | {vertex})
                if is_dynamo(g, tau, extended):
                    return extended

    logger.warning(
        "ordering attempts missed vertex %d; falling back to exhaustive search", vertex
    )
    work = 0
    others = [u for u in range(g.n) if u != vertex]
    for k in range(1, half + 1):
        for extra in combinations(others, k - 1):
            work += 1
            if budget is not None and work > budget:
                raise BudgetExceededError("exhaustive fallback budget exceeded")
            candidate = frozenset((vertex, *extra))
            if is_dynamo(g, tau, candidate):
                return candidate
    raise ConstructionError(
        f"no strict-majority dynamo of size <= {half} containing {vertex} was found"
    )


class MatchingBoundAudit(NamedTuple):
    dynamo_size: int
    matching_size: int
    component_count: int
    holds: bool


def matching_bound_audit(g: Graph, budget: int | None = None) -> MatchingBoundAudit:
    """Exact minimum strict-majority dynamo size against matching size plus
    component count.  Desk scale: the exact solver enumerates subsets."""
    tau = strict_majority_thresholds(g)
    dyn = len(exact_min_dynamo(g, tau, budget=budget))
    alpha_prime = matching_number(g)
    c = len(components(g))
    return MatchingBoundAudit(dyn, alpha_prime, c, dyn <= alpha_prime + c)
