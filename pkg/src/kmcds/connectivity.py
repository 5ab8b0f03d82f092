"""Vertex connectivity through unit-capacity flows on the vertex-split network.

Each vertex ``v`` becomes an arc ``v_in -> v_out`` of capacity one and each
edge ``uv`` becomes the pair ``u_out -> v_in``, ``v_out -> u_in`` of
unbounded capacity, so a max flow from ``s_out`` to ``t_in`` counts
internally vertex-disjoint ``s``-``t`` paths (Menger).
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidInputError, NotSeparableError, PreconditionError
from .graph import Graph, NodeSet, components_after_removal, is_connected


@dataclass(frozen=True)
class VertexCut:
    cut: NodeSet
    source_side: NodeSet
    sink_side: NodeSet

    def __len__(self) -> int:
        return len(self.cut)


class _SplitNetwork:
    """Residual network for one s-t flow computation."""

    def __init__(self, g: Graph, s: int, t: int, drop_edge: bool = False):
        big = g.n + 1
        size = 2 * g.n
        # arc = [head, residual capacity, index of reverse arc in head's list]
        self.arcs: list[list[list[int]]] = [[] for _ in range(size)]
        for v in range(g.n):
            if v != s and v != t:
                self._add(2 * v, 2 * v + 1, 1)
        for u, v in g.edges:
            if drop_edge and {u, v} == {s, t}:
                continue
            self._add(2 * u + 1, 2 * v, big)
            self._add(2 * v + 1, 2 * u, big)
        self.source = 2 * s + 1
        self.sink = 2 * t

    def _add(self, a: int, b: int, cap: int) -> None:
        self.arcs[a].append([b, cap, len(self.arcs[b])])
        self.arcs[b].append([a, 0, len(self.arcs[a]) - 1])

    def _augment(self) -> bool:
        parent: dict[int, tuple[int, int]] = {self.source: (-1, -1)}
        queue = deque([self.source])
        while queue:
            x = queue.popleft()
            for idx, (y, cap, _) in enumerate(self.arcs[x]):
                if cap > 0 and y not in parent:
                    parent[y] = (x, idx)
                    if y == self.sink:
                        while y != self.source:
                            x, idx = parent[y]
                            arc = self.arcs[x][idx]
                            arc[1] -= 1
                            self.arcs[y][arc[2]][1] += 1
                            y = x
                        return True
                    queue.append(y)
        return False

    def max_flow(self, cap: int | None = None) -> int:
        flow = 0
        while (cap is None or flow < cap) and self._augment():
            flow += 1
        return flow

    def reachable(self) -> set[int]:
        seen = {self.source}
        stack = [self.source]
        while stack:
            x = stack.pop()
            for y, c, _ in self.arcs[x]:
                if c > 0 and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen


def _check_pair(g: Graph, u: int, v: int) -> None:
    g.check_members((u, v))
    if u == v:
        raise InvalidInputError("connectivity of a vertex with itself is undefined")


def _disjoint_paths(g: Graph, u: int, v: int, cap: int | None = None) -> int:
    if g.has_edge(u, v):
        inner = None if cap is None else cap - 1
        return 1 + _SplitNetwork(g, u, v, drop_edge=True).max_flow(inner)
    return _SplitNetwork(g, u, v).max_flow(cap)


def local_vertex_connectivity(g: Graph, u: int, v: int) -> int:
    """Maximum number of internally vertex-disjoint ``u``-``v`` paths.

    For adjacent vertices this is one (the edge itself) plus the value with
    the edge deleted.
    """
    _check_pair(g, u, v)
    return _disjoint_paths(g, u, v)


def has_disjoint_paths(g: Graph, u: int, v: int, count: int) -> bool:
    """True iff ``u`` and ``v`` are joined by ``count`` internally disjoint paths.

    Stops the flow as soon as ``count`` paths are found.
    """
    _check_pair(g, u, v)
    return _disjoint_paths(g, u, v, cap=count) >= count


def min_vertex_cut(g: Graph, u: int, v: int) -> VertexCut:
    _check_pair(g, u, v)
    if g.has_edge(u, v):
        raise NotSeparableError(f"vertices {u} and {v} are adjacent")
    net = _SplitNetwork(g, u, v)
    net.max_flow()
    reach = net.reachable()
    cut = frozenset(x for x in range(g.n) if 2 * x in reach and 2 * x + 1 not in reach)
    source = frozenset(
        x for x in range(g.n) if x not in cut and (2 * x in reach or 2 * x + 1 in reach)
    )
    sink = frozenset(range(g.n)) - cut - source
    return VertexCut(cut, source, sink)


def _separable_pairs(g: Graph, anchors: int):
    """Non-adjacent pairs ``(a, b)`` with ``a < anchors``, in lexicographic order.

    Any vertex set of size below ``anchors`` misses one of the first
    ``anchors`` vertices, so a separator of that size always splits some pair
    listed here.
    """
    for a in range(min(anchors, g.n)):
        for b in range(a + 1, g.n):
            if not g.has_edge(a, b):
                yield a, b


def global_vertex_connectivity(g: Graph) -> int:
    """kappa(g): ``n - 1`` for complete graphs, 0 when disconnected."""
    if g.n < 2:
        raise InvalidInputError("vertex connectivity needs at least two vertices")
    if not is_connected(g):
        return 0
    best = min(g.n - 1, g.min_degree())
    j = 0
    while j <= best and j < g.n:
        for b in range(j + 1, g.n):
            if not g.has_edge(j, b):
                best = min(best, _disjoint_paths(g, j, b, cap=best))
        j += 1
    return best


def is_k_connected(g: Graph, k: int) -> bool:
    """True iff ``g`` has more than ``k`` vertices and no separator smaller than ``k``.

    ``k == 1`` means plain connectivity, so a single vertex qualifies.
    """
    if k < 1:
        raise InvalidInputError("k must be at least 1")
    if k == 1:
        return is_connected(g)
    if g.n < k + 1 or g.min_degree() < k or not is_connected(g):
        return False
    return all(_disjoint_paths(g, a, b, cap=k) >= k for a, b in _separable_pairs(g, k))


def find_i_separator(g: Graph, i: int) -> VertexCut | None:
    """A separator of exactly ``i`` vertices, or None if ``g`` is (i+1)-connected.

    The cut comes from the lexicographically first non-adjacent pair that
    ``i`` vertices can separate. Complete graphs have no separator at all and
    also yield None.
    """
    if i < 1:
        raise InvalidInputError("i must be at least 1")
    if g.n < i + 1 or not is_connected(g):
        raise PreconditionError(f"graph is not {i}-connected")
    for a, b in _separable_pairs(g, i + 1):
        flow = _disjoint_paths(g, a, b, cap=i + 1)
        if flow < i:
            raise PreconditionError(f"graph is not {i}-connected (pair {a},{b} has {flow} paths)")
        if flow == i:
            return min_vertex_cut(g, a, b)
    return None


def pair_separable(g: Graph, i: int, u: int, v: int) -> bool:
    """True iff some set of at most ``i`` vertices avoiding ``u, v`` separates them.

    Adjacent vertices are never separable.
    """
    if g.has_edge(u, v):
        return False
    return _SplitNetwork(g, u, v).max_flow(i + 1) <= i


def _splitting_pair(g: Graph, i: int, members: list[int], test) -> tuple[int, int] | None:
    # Every member is checked against the first i+1 members only: if those
    # anchors are mutually inseparable, a cut of size <= i misses one anchor
    # and so must split it from any member it splits off.
    anchors = members[: i + 1]
    for a, b in combinations(anchors, 2):
        if test(a, b):
            return a, b
    for x in members[i + 1:]:
        for a in anchors:
            if test(a, x):
                return a, x
    return None


def separator_splitting_set(g: Graph, i: int, b: Iterable[int]) -> VertexCut | None:
    """A cut of at most ``i`` vertices leaving two members of ``b`` apart, if any."""
    members = sorted(set(b))
    g.check_members(members)
    if len(members) < 2:
        raise InvalidInputError("need at least two vertices to split")
    pair = _splitting_pair(g, i, members, lambda x, y: pair_separable(g, i, x, y))
    if pair is None:
        return None
    return min_vertex_cut(g, *pair)


def cut_separates(g: Graph, cut: VertexCut) -> bool:
    """Check a VertexCut against :func:`components_after_removal`."""
    comps = components_after_removal(g, cut.cut)
    src = {idx for idx, comp in enumerate(comps) if comp & cut.source_side}
    snk = {idx for idx, comp in enumerate(comps) if comp & cut.sink_side}
    return bool(src) and bool(snk) and not (src & snk)
