"""Independent brute-force oracles used to validate the library.

Everything here works on plain adjacency lists with set arithmetic and
exhaustive enumeration, deliberately sharing no code with the package's
bitmask fast paths, so disagreements point at real bugs.
"""

from __future__ import annotations

from itertools import combinations, product


def closure(adjacency: list[tuple[int, ...]], tau: list[int], seed) -> set[int]:
    """Fixpoint of the activation rule, by repeated full scans."""
    n = len(adjacency)
    active = set(seed)
    changed = True
    while changed:
        changed = False
        for v in range(n):
            if v in active:
                continue
            if sum(1 for u in adjacency[v] if u in active) >= tau[v]:
                active.add(v)
                changed = True
    return active


def is_dynamo(adjacency: list[tuple[int, ...]], tau: list[int], seed) -> bool:
    return closure(adjacency, tau, seed) == set(range(len(adjacency)))


def min_dynamo_size(adjacency: list[tuple[int, ...]], tau: list[int]) -> int:
    """Smallest dynamo size by plain ascending subset enumeration.

    No pinning, no cutoff; exponential, for n up to about 10.
    """
    n = len(adjacency)
    for k in range(n + 1):
        for seed in combinations(range(n), k):
            if is_dynamo(adjacency, tau, seed):
                return k
    raise AssertionError("the full vertex set is always a dynamo")


def schedule_exists(adjacency: list[tuple[int, ...]], tau: list[int], seed) -> bool:
    """Search over one-vertex-at-a-time activation orders covering V."""
    n = len(adjacency)
    everything = frozenset(range(n))
    dead: set[frozenset[int]] = set()

    def go(active: frozenset[int]) -> bool:
        if active == everything:
            return True
        if active in dead:
            return False
        for v in everything - active:
            if sum(1 for u in adjacency[v] if u in active) >= tau[v]:
                if go(active | {v}):
                    return True
        dead.add(active)
        return False

    return go(frozenset(seed))


def matching_size(n: int, edges: list[tuple[int, int]]) -> int:
    """Maximum matching size by branching on the lowest unmatched vertex."""
    nbrs: dict[int, list[int]] = {v: [] for v in range(n)}
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    cache: dict[frozenset[int], int] = {}

    def best(avail: frozenset[int]) -> int:
        if not avail:
            return 0
        hit = cache.get(avail)
        if hit is not None:
            return hit
        v = min(avail)
        out = best(avail - {v})
        for u in nbrs[v]:
            if u in avail:
                out = max(out, 1 + best(avail - {v, u}))
        cache[avail] = out
        return out

    return best(frozenset(range(n)))


def cover_size(n: int, edges: list[tuple[int, int]]) -> int:
    """Minimum vertex cover size by ascending subset enumeration."""
    for k in range(n + 1):
        for subset in combinations(range(n), k):
            chosen = set(subset)
            if all(u in chosen or v in chosen for u, v in edges):
                return k
    raise AssertionError("the full vertex set always covers")


def chromatic(n: int, edges: list[tuple[int, int]]) -> int:
    """Chromatic number by enumerating all colorings; n up to about 6."""
    if n == 0:
        return 0
    for k in range(1, n + 1):
        for coloring in product(range(k), repeat=n):
            if all(coloring[u] != coloring[v] for u, v in edges):
                return k
    raise AssertionError("n colors always suffice")
