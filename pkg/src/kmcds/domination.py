"""m-fold domination, the (k,m)-CDS verifier and the greedy (1,m)-CDS builder."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .connectivity import global_vertex_connectivity, is_k_connected
from .errors import InfeasibleInputError, InternalError, InvalidInputError
from .graph import (
    Graph,
    NodeSet,
    components_after_removal,
    induced_subgraph,
    is_connected,
    shortest_path_between_sets,
)


@dataclass(frozen=True)
class CdsCertificate:
    set_size: int
    is_m_fold: bool
    connectivity_checked: int
    is_valid: bool
    violating_vertex: int | None = None

    def as_dict(self) -> dict:
        return {
            "set_size": self.set_size,
            "is_m_fold": self.is_m_fold,
            "connectivity_checked": self.connectivity_checked,
            "is_valid": self.is_valid,
            "violating_vertex": self.violating_vertex,
        }


def _first_underdominated(g: Graph, c: frozenset[int], m: int) -> int | None:
    for v in range(g.n):
        if v not in c and len(g.neighbor_set(v) & c) < m:
            return v
    return None


def is_m_fold_dominating(g: Graph, c: Iterable[int], m: int) -> bool:
    """Every vertex outside ``c`` has at least ``m`` neighbours in ``c``."""
    c = frozenset(c)
    g.check_members(c)
    return _first_underdominated(g, c, m) is None


def verify_km_cds(g: Graph, c: Iterable[int], k: int, m: int) -> CdsCertificate:
    """Independent check that ``c`` is a (k,m)-CDS of ``g``.

    ``connectivity_checked`` is ``k`` when ``G[c]`` is k-connected and the
    actual connectivity of ``G[c]`` otherwise.
    """
    c = frozenset(c)
    g.check_members(c)
    bad = _first_underdominated(g, c, m)
    if not c:
        conn = 0
    else:
        sub = induced_subgraph(g, c)
        if is_k_connected(sub, k):
            conn = k
        elif sub.n < 2:
            conn = 0
        else:
            conn = min(global_vertex_connectivity(sub), k - 1)
    return CdsCertificate(
        set_size=len(c),
        is_m_fold=bad is None,
        connectivity_checked=conn,
        is_valid=bad is None and conn >= k,
        violating_vertex=bad,
    )


def greedy_1m_cds(g: Graph, m: int) -> NodeSet:
    """Greedy connected m-fold dominating set.

    Phase A repeatedly takes the vertex that removes the most outstanding
    demand, where each vertex outside the set owes ``m`` minus its current
    dominators and a vertex entering the set cancels its own debt. Ties go to
    the smallest id. Phase B joins the two closest components of the chosen
    set through the interior of a shortest path until it is connected; every
    merge costs at most two vertices.
    """
    if m < 1:
        raise InvalidInputError("m must be at least 1")
    if g.n == 0 or not is_connected(g):
        raise InfeasibleInputError("graph must be connected for a connected dominating set")

    demand = [m] * g.n
    chosen: set[int] = set()
    outstanding = m * g.n
    while outstanding > 0:
        best, best_gain = -1, 0
        for v in range(g.n):
            if v in chosen:
                continue
            gain = demand[v] + sum(1 for w in g.neighbors(v) if w not in chosen and demand[w] > 0)
            if gain > best_gain:
                best, best_gain = v, gain
        chosen.add(best)
        outstanding -= demand[best]
        demand[best] = 0
        for w in g.neighbors(best):
            if w not in chosen and demand[w] > 0:
                demand[w] -= 1
                outstanding -= 1

    while True:
        sub = induced_subgraph(g, chosen)
        comps = [sub.to_parent(comp) for comp in components_after_removal(sub)]
        if len(comps) == 1:
            break
        best_path = None
        for comp in comps:
            path = shortest_path_between_sets(g, comp, frozenset(chosen) - comp)
            if best_path is None or path.length < best_path.length:
                best_path = path
        if best_path.length > 3:
            raise InternalError(f"dominating components at distance {best_path.length} > 3")
        chosen.update(best_path.internal)

    result = frozenset(chosen)
    cert = verify_km_cds(g, result, 1, m)
    if not cert.is_valid:
        raise InternalError(f"greedy (1,{m})-CDS failed verification: {cert}")
    return result
