"""Raise the connectivity of an m-fold dominating backbone one level at a time.

Starting from a connected m-fold dominating set ``C0``, each level ``i``
turns an (i,m)-CDS ``C`` into an (i+1,m)-CDS by growing an i-block ``B`` of
``G[C]``. While ``G[C]`` still has an i-separator ``S0``, a shortest path
between the parts of ``C0`` on either side of ``S0`` contributes at most two
new vertices; either those vertices let ``B`` absorb the path's far end
(a vertex of ``C0``), or a splitting separator ``S`` yields a new
i-separator ``S1`` whose block side is strictly smaller, and the search
repeats with ``S1``. Every level therefore adds at most ``2|C0|`` vertices
and the final backbone has at most ``(2k-1)|C0|`` vertices.

Every claim the correctness argument relies on is checked as the run
proceeds and raises :class:`~kmcds.errors.InternalError` when it fails. With
``KMCDS_ASSERT=warn`` :func:`solve` instead logs the failure and falls back
to the whole vertex set, which is always a valid answer.
"""

from __future__ import annotations

import logging
import os
from collections import Counter
from collections.abc import Callable
from dataclasses import dataclass, field, replace

from .blocks import Block, PairTester, block_closure, find_any_block
from .connectivity import find_i_separator, is_k_connected, min_vertex_cut
from .domination import CdsCertificate, greedy_1m_cds, verify_km_cds
from .errors import (
    InfeasibleGraphError,
    InternalError,
    InvalidInputError,
    UnsupportedParametersError,
)
from .graph import (
    Graph,
    NodeSet,
    Path,
    components_after_removal,
    induced_subgraph,
    open_neighborhood,
    shortest_path_between_sets,
)

log = logging.getLogger(__name__)

ASSERT_ENV = "KMCDS_ASSERT"


def assertion_profile() -> str:
    profile = os.environ.get(ASSERT_ENV, "hard").strip().lower()
    if profile not in ("hard", "warn"):
        raise InvalidInputError(f"{ASSERT_ENV} must be 'hard' or 'warn', got {profile!r}")
    return profile


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InternalError(message)


@dataclass(frozen=True)
class SeparatorContext:
    s0: NodeSet
    side1: NodeSet
    side2: NodeSet


@dataclass(frozen=True)
class StepResult:
    kind: str
    added: NodeSet
    path: Path
    merged_c0_vertex: int | None = None
    new_separator: NodeSet | None = None
    side1_size_after: int = 0
    context: SeparatorContext | None = None


@dataclass(frozen=True)
class StepRecord:
    level: int
    kind: str  # degenerate | bootstrap | accepted | adjusted
    size_before: int
    size_after: int
    added: tuple[int, ...] = ()
    block_before: int = 0
    block_after: int = 0
    side1_before: int | None = None
    side1_after: int | None = None
    merged_c0_vertex: int | None = None
    separator: tuple[int, ...] = ()

    def as_dict(self) -> dict:
        return {
            "level": self.level,
            "kind": self.kind,
            "size_before": self.size_before,
            "size_after": self.size_after,
            "added": list(self.added),
            "block_before": self.block_before,
            "block_after": self.block_after,
            "side1_before": self.side1_before,
            "side1_after": self.side1_after,
            "merged_c0_vertex": self.merged_c0_vertex,
            "separator": list(self.separator),
        }


@dataclass
class SolverTrace:
    n: int
    k: int
    m: int
    c0: tuple[int, ...]
    steps: list[StepRecord] = field(default_factory=list)
    final_size: int | None = None
    fallback: bool = False

    @property
    def c0_size(self) -> int:
        return len(self.c0)

    def nodes_added(self) -> dict[int, int]:
        totals = {level: 0 for level in range(1, self.k)}
        for step in self.steps:
            totals[step.level] = totals.get(step.level, 0) + len(step.added)
        return totals

    def kind_counts(self) -> dict[int, Counter]:
        counts: dict[int, Counter] = {level: Counter() for level in range(1, self.k)}
        for step in self.steps:
            counts.setdefault(step.level, Counter())[step.kind] += 1
        return counts

    def max_adjustment_run(self) -> dict[int, int]:
        """Longest streak of adjusted steps between acceptances, per level."""
        runs = {level: 0 for level in range(1, self.k)}
        current: dict[int, int] = {}
        for step in self.steps:
            if step.kind == "adjusted":
                current[step.level] = current.get(step.level, 0) + 1
                runs[step.level] = max(runs.get(step.level, 0), current[step.level])
            else:
                current[step.level] = 0
        return runs

    def violations(self) -> list[str]:
        """Every breach of the per-step and per-level size guarantees."""
        out = []
        c0 = set(self.c0)
        for level, added in self.nodes_added().items():
            if added > 2 * self.c0_size:
                out.append(f"level {level}: added {added} > 2|C0| = {2 * self.c0_size}")
        for level, counts in self.kind_counts().items():
            if counts["accepted"] > self.c0_size:
                out.append(f"level {level}: {counts['accepted']} acceptances > |C0|")
        for level, run in self.max_adjustment_run().items():
            if run > self.n:
                out.append(f"level {level}: {run} consecutive adjustments > n")
        for idx, step in enumerate(self.steps):
            if step.kind in ("accepted", "bootstrap", "degenerate") and len(step.added) > 2:
                out.append(f"step {idx}: {step.kind} added {len(step.added)} > 2 vertices")
            if step.kind == "accepted":
                if step.merged_c0_vertex not in c0:
                    out.append(f"step {idx}: merged vertex {step.merged_c0_vertex} not in C0")
                if step.block_after <= step.block_before:
                    out.append(f"step {idx}: block did not grow")
            if step.kind == "adjusted":
                if step.side1_after is None or step.side1_before is None or step.side1_after >= step.side1_before:
                    out.append(f"step {idx}: block side did not shrink")
                if step.added:
                    out.append(f"step {idx}: adjusted step added vertices")
        if self.final_size is not None and not self.fallback:
            bound = (2 * self.k - 1) * self.c0_size
            if self.final_size > bound:
                out.append(f"final size {self.final_size} > (2k-1)|C0| = {bound}")
        return out

    def summary(self) -> dict:
        counts = self.kind_counts()
        return {
            "c0_size": self.c0_size,
            "final_size": self.final_size,
            "fallback": self.fallback,
            "levels": [
                {
                    "level": level,
                    "nodes_added": added,
                    "accepted": counts[level]["accepted"],
                    "adjusted": counts[level]["adjusted"],
                    "bootstrap": counts[level]["bootstrap"],
                    "degenerate": counts[level]["degenerate"],
                    "max_adjustment_run": self.max_adjustment_run()[level],
                }
                for level, added in sorted(self.nodes_added().items())
            ],
        }


@dataclass(frozen=True)
class SolverState:
    g: Graph
    c0: NodeSet
    c: NodeSet
    level: int
    block: Block | None = None
    trace: SolverTrace | None = None

    def record(self, step: StepRecord) -> None:
        if self.trace is not None:
            self.trace.steps.append(step)


@dataclass
class Solution:
    c: NodeSet
    c0: NodeSet
    k: int
    m: int
    trace: SolverTrace
    certificate: CdsCertificate

    @property
    def bound(self) -> int:
        return (2 * self.k - 1) * len(self.c0)


def _separator_context(g: Graph, c: NodeSet, s0: NodeSet, anchor: NodeSet) -> SeparatorContext:
    """Split ``G[c] - s0`` into the component holding ``anchor - s0`` and the rest."""
    sub = induced_subgraph(g, c)
    comps = [sub.to_parent(comp) for comp in components_after_removal(sub, sub.to_local(s0))]
    _require(len(comps) >= 2, f"{sorted(s0)} does not separate G[C]")
    rest = anchor - s0
    _require(bool(rest), "anchor set lies inside the separator")
    hits = [comp for comp in comps if comp & rest]
    _require(len(hits) == 1 and rest <= hits[0], f"separator {sorted(s0)} splits the block")
    side1 = hits[0]
    return SeparatorContext(s0, side1, c - s0 - side1)


def split_c0_sides(st: SolverState, ctx: SeparatorContext) -> tuple[NodeSet, NodeSet]:
    """Partition ``C0 - S0`` into the components of ``G[C0] - S0`` meeting side 1 and the rest."""
    rest = st.c0 - ctx.s0
    _require(bool(rest), "C0 lies inside the separator")
    sub = induced_subgraph(st.g, rest)
    g1: set[int] = set()
    g2: set[int] = set()
    for comp in components_after_removal(sub):
        members = sub.to_parent(comp)
        (g1 if members & ctx.side1 else g2).update(members)
    _require(bool(g1), "no part of C0 on the block side of the separator")
    _require(bool(g2), "no part of C0 off the block side of the separator")
    return frozenset(g1), frozenset(g2)


def _short_path(st: SolverState, g1: NodeSet, g2: NodeSet, s0: NodeSet) -> Path:
    path = shortest_path_between_sets(st.g, g1, g2, s0)
    _require(path.length <= 3, f"shortest C0 path has length {path.length} > 3")
    return path


def bootstrap_block(st: SolverState) -> tuple[NodeSet, Block]:
    """Create an i-block when ``G[C]`` has none.

    Returns the new vertices ``U`` (at most two) and an i-block of
    ``G[C + U]`` grown from ``U`` plus its neighbours in ``C``.
    """
    g, c, i = st.g, st.c, st.level
    sub = induced_subgraph(g, c)
    cut = find_i_separator(sub, i)
    _require(cut is not None, "bootstrap needs an i-separator of G[C]")
    s0 = sub.to_parent(cut.cut)
    ctx = _separator_context(g, c, s0, frozenset([min(st.c0 - s0)]))
    g1, g2 = split_c0_sides(st, ctx)
    path = _short_path(st, g1, g2, s0)
    u = frozenset(path.internal) - c
    _require(bool(u), "bootstrap path added no new vertex")
    grown = c | u
    seed = u | (open_neighborhood(g, u) & c)
    _require(len(seed) >= i + 2, f"bootstrap seed has {len(seed)} < i+2 vertices")
    host = induced_subgraph(g, grown)
    tester = PairTester(host, i)
    local_seed = host.to_local(seed)
    _require(tester.splitting_pair(local_seed) is None, "bootstrap seed is separable by i vertices")
    block = block_closure(host, i, local_seed, tester)
    return u, Block(host.to_parent(block.members), i, len(grown))


def expand_block_step(st: SolverState, ctx: SeparatorContext) -> StepResult:
    """One attempt to grow the block across the separator ``ctx.s0``.

    Accepted when the path's far end cannot be split from the block by i
    vertices once the path is added; otherwise returns a replacement
    separator whose block side is strictly smaller.
    """
    g, c, i = st.g, st.c, st.level
    block = st.block.members
    g1, g2 = split_c0_sides(st, ctx)
    path = _short_path(st, g1, g2, ctx.s0)
    u_t = path.end
    _require(u_t in st.c0 and u_t not in block, "path end is not a new C0 vertex")
    added = frozenset(path.internal) - c
    host = induced_subgraph(g, c | added)
    tester = PairTester(host, i)
    pair = tester.splitting_pair(host.to_local(block | {u_t}))
    if pair is None:
        return StepResult(
            "accepted", added, path, merged_c0_vertex=u_t, side1_size_after=len(ctx.side1)
        )

    s = host.to_parent(min_vertex_cut(host, *pair).cut)
    _require(len(s) == i, f"splitting separator has {len(s)} != {i} vertices")
    _require(s <= c, "splitting separator uses a newly added vertex")
    side_s = _separator_context(g, c, s, block).side1
    _require(u_t not in side_s, "splitting separator keeps the path end with the block")
    overlap = ctx.side1 & side_s
    _require(bool(overlap), "block sides of the two separators are disjoint")
    c_sub = induced_subgraph(g, c)
    s1 = c_sub.to_parent(open_neighborhood(c_sub, c_sub.to_local(overlap)))
    _require(len(s1) == i, f"neighbourhood of the side overlap has {len(s1)} != {i} vertices")
    new_ctx = _separator_context(g, c, s1, block)
    _require(
        len(new_ctx.side1) < len(ctx.side1),
        f"block side did not shrink ({len(new_ctx.side1)} >= {len(ctx.side1)})",
    )
    return StepResult(
        "adjusted",
        frozenset(),
        path,
        new_separator=s1,
        side1_size_after=len(new_ctx.side1),
        context=new_ctx,
    )


def _degenerate_step(st: SolverState) -> SolverState:
    # G[C] is complete on i+1 vertices, so there is no i-separator at all;
    # any outside vertex sees all of C (m >= i+1) and closes K_{i+2}.
    g, c, i = st.g, st.c, st.level
    outside = [v for v in range(g.n) if v not in c]
    _require(bool(outside), "backbone already spans the graph")
    v = max(outside, key=lambda x: (g.degree(x), -x))
    grown = c | {v}
    _require(is_k_connected(induced_subgraph(g, grown), i + 1), "degenerate step did not raise connectivity")
    st.record(StepRecord(i, "degenerate", len(c), len(grown), (v,)))
    return replace(st, c=grown, level=i + 1, block=None)


def augment_level(st: SolverState) -> SolverState:
    """Turn the (i,m)-CDS ``st.c`` into an (i+1,m)-CDS, ``i = st.level``."""
    g, i = st.g, st.level
    c = st.c
    sub = induced_subgraph(g, c)
    if is_k_connected(sub, i + 1):
        return replace(st, level=i + 1, block=None)
    if sub.is_complete():
        return _degenerate_step(st)

    block = st.block if st.block is not None and st.block.level == i else None
    if block is None:
        found = find_any_block(sub, i)
        if found is not None:
            block = Block(sub.to_parent(found.members), i, len(c))
    if block is None:
        u, block = bootstrap_block(st)
        st.record(StepRecord(i, "bootstrap", len(c), len(c | u), tuple(sorted(u)), 0, len(block)))
        c = c | u

    budget = 2 * len(st.c0)
    while not is_k_connected(sub := induced_subgraph(g, c), i + 1):
        cut = find_i_separator(sub, i)
        _require(cut is not None and len(cut) == i, "G[C] is not (i+1)-connected yet has no i-separator")
        ctx = _separator_context(g, c, sub.to_parent(cut.cut), block.members)
        adjustments = 0
        while True:
            here = replace(st, c=c, block=block)
            res = expand_block_step(here, ctx)
            if res.kind == "accepted":
                grown = c | res.added
                host = induced_subgraph(g, grown)
                seed = host.to_local(block.members | {res.merged_c0_vertex})
                closed = block_closure(host, i, seed)
                new_block = Block(host.to_parent(closed.members), i, len(grown))
                _require(block.members < new_block.members, "accepted step did not grow the block")
                st.record(
                    StepRecord(
                        i, "accepted", len(c), len(grown), tuple(sorted(res.added)),
                        len(block), len(new_block), len(ctx.side1), len(ctx.side1),
                        res.merged_c0_vertex, tuple(sorted(ctx.s0)),
                    )
                )
                c, block = grown, new_block
                break
            adjustments += 1
            _require(adjustments <= g.n, "separator adjustments exceeded n")
            st.record(
                StepRecord(
                    i, "adjusted", len(c), len(c), (), len(block), len(block),
                    len(ctx.side1), res.side1_size_after, None, tuple(sorted(res.new_separator)),
                )
            )
            ctx = res.context
        _require(len(c) - len(st.c) <= budget, f"level {i} added more than 2|C0| vertices")
    return replace(st, c=c, level=i + 1, block=None)


def solve(
    g: Graph,
    k: int,
    m: int,
    c0_builder: Callable[[Graph, int], NodeSet] = greedy_1m_cds,
) -> Solution:
    """Compute a (k,m)-CDS of the k-connected graph ``g`` (requires ``m >= k``).

    ``c0_builder`` supplies the starting connected m-fold dominating set;
    the result has at most ``(2k-1)`` times as many vertices.
    """
    if not (k >= 1 and m >= k):
        raise UnsupportedParametersError(f"need m >= k >= 1, got k={k}, m={m}")
    if not is_k_connected(g, k):
        raise InfeasibleGraphError(f"input graph is not {k}-connected")
    profile = assertion_profile()
    c0 = frozenset(c0_builder(g, m))
    if not verify_km_cds(g, c0, 1, m).is_valid:
        raise InternalError("starting set is not a connected m-fold dominating set")

    trace = SolverTrace(g.n, k, m, tuple(sorted(c0)))
    st = SolverState(g, c0, c0, 1, None, trace)
    try:
        while st.level < k:
            st = augment_level(st)
            if profile == "hard":
                cert = verify_km_cds(g, st.c, st.level, m)
                _require(cert.is_valid, f"level {st.level} backbone fails verification: {cert}")
        trace.final_size = len(st.c)
        violations = trace.violations()
        _require(not violations, "; ".join(violations))
        c = st.c
    except InternalError as exc:
        if profile == "hard":
            raise
        log.warning("falling back to the full vertex set: %s", exc)
        trace.fallback = True
        c = frozenset(range(g.n))

    trace.final_size = len(c)
    cert = verify_km_cds(g, c, k, m)
    if not cert.is_valid:
        raise InternalError(f"final backbone fails verification: {cert}")
    return Solution(c, c0, k, m, trace, cert)
