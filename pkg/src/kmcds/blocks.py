"""i-blocks: maximal vertex sets (of size > i) that no i vertices can split.

Two vertices are *inseparable at level i* when no set of at most ``i`` other
vertices separates them. For non-adjacent vertices this is the Menger
condition of ``i + 1`` internally disjoint paths; adjacent vertices are
always inseparable. A set is inseparable iff all its pairs are, because a
separator that splits a set splits some pair of it.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .connectivity import _splitting_pair, pair_separable
from .errors import InvalidInputError, PreconditionError
from .graph import Graph, NodeSet


@dataclass(frozen=True)
class Block:
    members: NodeSet
    level: int
    host_size: int

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v: object) -> bool:
        return v in self.members


class PairTester:
    """Memoised pairwise separability for one graph at one level."""

    def __init__(self, g: Graph, i: int):
        self.g = g
        self.i = i
        self._cache: dict[tuple[int, int], bool] = {}

    def separable(self, u: int, v: int) -> bool:
        key = (u, v) if u < v else (v, u)
        hit = self._cache.get(key)
        if hit is None:
            hit = self._cache[key] = pair_separable(self.g, self.i, u, v)
        return hit

    def splitting_pair(self, members: Iterable[int]) -> tuple[int, int] | None:
        return _splitting_pair(self.g, self.i, sorted(set(members)), self.separable)

    def joins(self, v: int, members: list[int]) -> bool:
        # members are mutually inseparable; i+1 of them pin down the rest
        return not any(self.separable(v, w) for w in members[: self.i + 1])


def is_inseparable(g: Graph, i: int, b: Iterable[int]) -> bool:
    b = frozenset(b)
    g.check_members(b)
    if len(b) < 2:
        raise InvalidInputError("inseparability needs at least two vertices")
    return PairTester(g, i).splitting_pair(b) is None


def _closure(tester: PairTester, seed: Iterable[int]) -> list[int]:
    members = sorted(set(seed))
    inside = set(members)
    changed = True
    while changed:
        changed = False
        for v in range(tester.g.n):
            if v not in inside and tester.joins(v, members):
                members.append(v)
                inside.add(v)
                changed = True
    return members


def block_closure(g: Graph, i: int, seed: Iterable[int], tester: PairTester | None = None) -> Block:
    """Grow ``seed`` to a maximal inseparable set.

    Candidates are scanned in ascending id and added whenever they are
    inseparable from every current member; the scan repeats until nothing
    changes.
    """
    seed = frozenset(seed)
    g.check_members(seed)
    tester = tester or PairTester(g, i)
    if len(seed) >= 2 and tester.splitting_pair(seed) is not None:
        raise PreconditionError("seed can be split by a separator of size <= i")
    return Block(frozenset(_closure(tester, seed)), i, g.n)


def find_any_block(g: Graph, i: int, tester: PairTester | None = None) -> Block | None:
    """First i-block found by closing inseparable pairs in id order."""
    tester = tester or PairTester(g, i)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if tester.separable(u, v):
                continue
            members = frozenset(_closure(tester, (u, v)))
            if len(members) >= i + 1:
                return Block(members, i, g.n)
    return None


def is_block(g: Graph, i: int, members: Iterable[int]) -> bool:
    """Check the i-block definition directly: size, inseparability, maximality."""
    members = frozenset(members)
    if len(members) < max(i + 1, 2):
        return False
    tester = PairTester(g, i)
    if tester.splitting_pair(members) is not None:
        return False
    return not any(
        all(not tester.separable(v, w) for w in members)
        for v in range(g.n)
        if v not in members
    )
