"""Named small graphs used throughout the tests and examples."""

from __future__ import annotations

from itertools import combinations

from .graph import Graph


def complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    return Graph(n, [(v, (v + 1) % n) for v in range(n)])


def path(n: int) -> Graph:
    return Graph(n, [(v, v + 1) for v in range(n - 1)])


def wheel(rim: int) -> Graph:
    """Hub ``rim`` joined to every vertex of the cycle ``0..rim-1``."""
    return Graph(rim + 1, [(v, (v + 1) % rim) for v in range(rim)] + [(v, rim) for v in range(rim)])


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, v) for v in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def bowtie() -> Graph:
    return Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def petersen() -> Graph:
    outer = [(v, (v + 1) % 5) for v in range(5)]
    spokes = [(v, v + 5) for v in range(5)]
    inner = [(5 + v, 5 + (v + 2) % 5) for v in range(5)]
    return Graph(10, outer + spokes + inner)


def split_block() -> Graph:
    """2-connected graph whose 2-block {6, 7, 8} induces two components."""
    return Graph(9, [
        (0, 1), (0, 8), (1, 3), (1, 7), (2, 4), (2, 6), (2, 8),
        (3, 7), (3, 8), (4, 8), (5, 6), (5, 8), (6, 7),
    ])


# K_{2,3}: parts {a, b} = {0, 1} and {x, y, z} = {2, 3, 4}
FIXTURES = {
    "K4": lambda: complete(4),
    "K5": lambda: complete(5),
    "P4": lambda: path(4),
    "C6": lambda: cycle(6),
    "bowtie": bowtie,
    "K23": lambda: complete_bipartite(2, 3),
    "W5": lambda: wheel(4),
    "W7": lambda: wheel(6),
    "petersen": petersen,
    "star6": lambda: star(6),
    "split_block": split_block,
}


def fixture(name: str) -> Graph:
    try:
        return FIXTURES[name]()
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}") from None
