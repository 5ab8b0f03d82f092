"""Exhaustive ground truth for small graphs.

Nothing here touches the flow code: connectivity is decided by deleting
every candidate vertex subset and testing what is left, on bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, NodeSet


@dataclass(frozen=True)
class ExactResult:
    optimum: NodeSet | None
    opt_size: int | None
    explored: int
    timed_out: bool


def _masks(g: Graph) -> list[int]:
    return [sum(1 << w for w in g.neighbors(v)) for v in range(g.n)]


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _reach(adj: list[int], alive: int, start: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        nxt &= alive & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def _mask_connected(adj: list[int], alive: int) -> bool:
    if not alive:
        return False
    start = (alive & -alive).bit_length() - 1
    return _reach(adj, alive, start) == alive


def _mask_k_connected(adj: list[int], alive: int, k: int) -> bool:
    members = _bits(alive)
    if k == 1:
        return _mask_connected(adj, alive)
    if len(members) < k + 1:
        return False
    for size in range(k):
        for removed in combinations(members, size):
            rest = alive
            for v in removed:
                rest &= ~(1 << v)
            if not _mask_connected(adj, rest):
                return False
    return True


def brute_force_connectivity(g: Graph) -> int:
    """Smallest number of vertices whose deletion disconnects ``g`` (n-1 if complete)."""
    if g.n < 2:
        return 0
    adj = _masks(g)
    full = (1 << g.n) - 1
    if not _mask_connected(adj, full):
        return 0
    for size in range(1, g.n - 1):
        for removed in combinations(range(g.n), size):
            rest = full
            for v in removed:
                rest &= ~(1 << v)
            if not _mask_connected(adj, rest):
                return size
    return g.n - 1


def brute_force_min_separator_size(g: Graph, u: int, v: int) -> int | None:
    """Fewest vertices (other than ``u``, ``v``) separating ``u`` from ``v``; None if adjacent."""
    if g.has_edge(u, v):
        return None
    adj = _masks(g)
    full = (1 << g.n) - 1
    others = [w for w in range(g.n) if w not in (u, v)]
    for size in range(len(others) + 1):
        for removed in combinations(others, size):
            rest = full
            for w in removed:
                rest &= ~(1 << w)
            if not (_reach(adj, rest, u) >> v) & 1:
                return size
    raise AssertionError("unreachable: removing every other vertex separates non-adjacent u, v")


def brute_force_separable(g: Graph, i: int, u: int, v: int) -> bool:
    size = brute_force_min_separator_size(g, u, v)
    return size is not None and size <= i


def enumerate_blocks(g: Graph, i: int) -> list[NodeSet]:
    """All maximal vertex sets of size >= i+1 that no i vertices can split."""
    n = g.n
    ok = [[True] * n for _ in range(n)]
    for u, v in combinations(range(n), 2):
        ok[u][v] = ok[v][u] = not brute_force_separable(g, i, u, v)
    cliques = []
    for mask in range(1, 1 << n):
        members = _bits(mask)
        if len(members) < max(i + 1, 2):
            continue
        if all(ok[a][b] for a, b in combinations(members, 2)):
            cliques.append(mask)
    maximal = [c for c in cliques if not any(c != d and c & d == c for d in cliques)]
    return sorted((frozenset(_bits(c)) for c in maximal), key=sorted)


def exact_min_km_cds(g: Graph, k: int, m: int, budget: int = 10**7) -> ExactResult:
    """Smallest (k,m)-CDS by enumeration in size order, lexicographic within a size.

    Sizes below ``k + 1`` (or below ``m`` for proper subsets) cannot work and
    are skipped. ``budget`` caps the number of subsets examined.
    """
    adj = _masks(g)
    n = g.n
    full = (1 << n) - 1
    start = 1 if k == 1 else k + 1
    explored = 0
    for size in range(start, n + 1):
        if size < n and size < m:
            continue
        for combo in combinations(range(n), size):
            explored += 1
            if explored > budget:
                return ExactResult(None, None, explored - 1, True)
            mask = 0
            for v in combo:
                mask |= 1 << v
            if any((adj[v] & mask).bit_count() < m for v in _bits(full & ~mask)):
                continue
            if _mask_k_connected(adj, mask, k):
                return ExactResult(frozenset(combo), size, explored, False)
    return ExactResult(None, None, explored, False)
