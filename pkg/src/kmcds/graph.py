"""Immutable undirected simple graphs over dense integer vertex ids.

Vertex sets are plain ``frozenset[int]`` values; nothing in the library ever
mutates a :class:`Graph` once built.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass

from .errors import InvalidInputError, NoPathError

NodeSet = frozenset[int]


class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``labels`` maps each local id back to an id in a parent graph when the
    graph was produced by :func:`induced_subgraph`; for a root graph it is the
    identity.
    """

    __slots__ = ("n", "_adj", "_nbrs", "labels", "_local")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), labels: Iterable[int] | None = None):
        if n < 0:
            raise InvalidInputError(f"vertex count must be non-negative, got {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidInputError(f"self-loop at vertex {u}")
            if v in nbrs[u]:
                raise InvalidInputError(f"parallel edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self._nbrs = tuple(frozenset(s) for s in nbrs)
        self._adj = tuple(tuple(sorted(s)) for s in nbrs)
        self.labels = tuple(range(n)) if labels is None else tuple(labels)
        if len(self.labels) != n:
            raise InvalidInputError("labels must name every vertex exactly once")
        self._local = {lab: i for i, lab in enumerate(self.labels)}

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self._adj[u] if u < v]

    def number_of_edges(self) -> int:
        return sum(len(a) for a in self._adj) // 2

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._nbrs[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbrs[u]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def min_degree(self) -> int:
        return min((len(a) for a in self._adj), default=0)

    def is_complete(self) -> bool:
        return all(len(a) == self.n - 1 for a in self._adj)

    def to_parent(self, vertices: Iterable[int]) -> NodeSet:
        """Translate local ids to the ids of the graph this one was cut from."""
        return frozenset(self.labels[v] for v in vertices)

    def to_local(self, vertices: Iterable[int]) -> NodeSet:
        return frozenset(self._local[v] for v in vertices)

    def check_members(self, vertices: Iterable[int]) -> None:
        for v in vertices:
            if not 0 <= v < self.n:
                raise InvalidInputError(f"vertex {v} out of range for n={self.n}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.number_of_edges()})"


@dataclass(frozen=True)
class Path:
    nodes: tuple[int, ...]

    @property
    def internal(self) -> tuple[int, ...]:
        return self.nodes[1:-1]

    @property
    def length(self) -> int:
        return len(self.nodes) - 1

    @property
    def start(self) -> int:
        return self.nodes[0]

    @property
    def end(self) -> int:
        return self.nodes[-1]


def open_neighborhood(g: Graph, u_set: Iterable[int]) -> NodeSet:
    u_set = frozenset(u_set)
    g.check_members(u_set)
    out: set[int] = set()
    for u in u_set:
        out.update(g.neighbor_set(u))
    return frozenset(out - u_set)


def closed_neighborhood(g: Graph, u_set: Iterable[int]) -> NodeSet:
    u_set = frozenset(u_set)
    return open_neighborhood(g, u_set) | u_set


def induced_subgraph(g: Graph, c: Iterable[int]) -> Graph:
    """Return ``G[c]`` relabelled to ``0..|c|-1`` in ascending id order.

    The result's ``labels`` point at ``g``'s ids, so ``sub.to_parent`` maps
    answers computed on the subgraph back into ``g``.
    """
    members = sorted(set(c))
    if not members:
        raise InvalidInputError("induced subgraph of an empty vertex set")
    g.check_members(members)
    index = {v: i for i, v in enumerate(members)}
    edges = [
        (index[u], index[v])
        for u in members
        for v in g.neighbors(u)
        if u < v and v in index
    ]
    return Graph(len(members), edges, labels=[g.labels[v] for v in members])


def components_after_removal(g: Graph, removed: Iterable[int] = ()) -> list[NodeSet]:
    """Connected components of ``g - removed``, ordered by smallest member."""
    removed = frozenset(removed)
    g.check_members(removed)
    if g.n > 0 and len(removed) == g.n:
        raise InvalidInputError("cannot remove every vertex")
    seen = set(removed)
    comps: list[NodeSet] = []
    for root in range(g.n):
        if root in seen:
            continue
        seen.add(root)
        comp = [root]
        stack = [root]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components_after_removal(g)) == 1


def shortest_path_between_sets(
    g: Graph, a: Iterable[int], b: Iterable[int], forbidden: Iterable[int] = ()
) -> Path:
    """Shortest path in ``g - forbidden`` from a vertex of ``a`` to a vertex of ``b``.

    The search runs breadth-first from ``b`` (sources and neighbours visited
    in ascending id order) and stops at the first vertex of ``a`` it
    discovers, so the result is reproducible. Returned nodes run from the
    ``a`` end to the ``b`` end.
    """
    a, b, forbidden = frozenset(a), frozenset(b), frozenset(forbidden)
    g.check_members(a | b | forbidden)
    if not a or not b:
        raise InvalidInputError("both endpoint sets must be non-empty")
    if a & b or (a | b) & forbidden:
        raise InvalidInputError("endpoint sets must be disjoint from each other and from forbidden")
    parent: dict[int, int | None] = {v: None for v in sorted(b)}
    queue = deque(sorted(b))
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w in parent or w in forbidden:
                continue
            parent[w] = u
            if w in a:
                nodes = [w]
                step = parent[w]
                while step is not None:
                    nodes.append(step)
                    step = parent[step]
                return Path(tuple(nodes))
            queue.append(w)
    raise NoPathError("no path between the given sets avoids the forbidden vertices")


def bfs_distances(g: Graph, sources: Iterable[int], forbidden: Iterable[int] = ()) -> dict[int, int]:
    forbidden = frozenset(forbidden)
    dist = {s: 0 for s in sources if s not in forbidden}
    queue = deque(sorted(dist))
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in dist and w not in forbidden:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist
