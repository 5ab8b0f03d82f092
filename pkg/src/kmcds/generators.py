"""Seeded instance generators.

All randomness comes from :class:`random.Random` (Mersenne Twister) seeded
with the caller's integer, so a fixed seed reproduces the same graph bit for
bit on every platform.
"""

from __future__ import annotations

import math
import random

from .errors import InvalidInputError
from .graph import Graph


def harary_edges(n: int, k: int) -> set[tuple[int, int]]:
    """Edges of the Harary graph H(k, n): minimum edges for connectivity ``k``."""
    if k < 1 or n < k + 1:
        raise InvalidInputError(f"Harary graph needs 1 <= k < n, got k={k}, n={n}")
    if k == 1:
        return {(v, v + 1) for v in range(n - 1)}
    edges = set()
    for v in range(n):
        for off in range(1, k // 2 + 1):
            w = (v + off) % n
            edges.add((min(v, w), max(v, w)))
    if k % 2 == 1:
        half = n // 2
        # odd k: one diameter spoke per vertex (n even), or per half plus one (n odd)
        for v in range(half if n % 2 == 0 else half + 1):
            w = (v + half) % n
            if v != w:
                edges.add((min(v, w), max(v, w)))
    return edges


def gen_random_k_connected(n: int, k: int, edge_prob: float, seed: int) -> Graph:
    """Harary base H(k, n) plus each other pair independently with ``edge_prob``."""
    if n <= k:
        raise InvalidInputError(f"need n > k, got n={n}, k={k}")
    if not 0.0 <= edge_prob <= 1.0:
        raise InvalidInputError(f"edge_prob must lie in [0, 1], got {edge_prob}")
    rng = random.Random(seed)
    edges = harary_edges(n, k)
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < edge_prob:
                edges.add((u, v))
    return Graph(n, sorted(edges))


def gen_unit_disk(n: int, radius: float, seed: int) -> tuple[Graph, list[tuple[float, float]]]:
    """Random unit disk graph in the unit square; returns the graph and the points."""
    if n < 1:
        raise InvalidInputError("need at least one vertex")
    if radius <= 0:
        raise InvalidInputError("radius must be positive")
    rng = random.Random(seed)
    points = [(rng.random(), rng.random()) for _ in range(n)]
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if math.dist(points[u], points[v]) <= radius
    ]
    return Graph(n, edges), points
