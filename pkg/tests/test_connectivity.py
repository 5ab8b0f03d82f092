import random
from itertools import combinations

import networkx as nx
import pytest

from kmcds.connectivity import (
    cut_separates,
    find_i_separator,
    global_vertex_connectivity,
    has_disjoint_paths,
    is_k_connected,
    local_vertex_connectivity,
    min_vertex_cut,
    separator_splitting_set,
)
from kmcds.errors import InvalidInputError, NotSeparableError, PreconditionError
from kmcds.fixtures import bowtie, complete, complete_bipartite, cycle, petersen
from kmcds.generators import gen_random_k_connected
from kmcds.graph import Graph, components_after_removal
from kmcds.oracle import brute_force_connectivity, brute_force_min_separator_size

from conftest import random_graph, small_corpus

K23 = complete_bipartite(2, 3)  # a=0, b=1, x,y,z = 2,3,4


@pytest.mark.parametrize(
    "g, u, v, expected",
    [(complete(5), 0, 1, 4), (cycle(6), 0, 3, 2), (K23, 0, 1, 3)],
)
def test_local_vertex_connectivity(g, u, v, expected):
    assert local_vertex_connectivity(g, u, v) == expected


def test_local_connectivity_rejects_same_vertex():
    with pytest.raises(InvalidInputError):
        local_vertex_connectivity(cycle(6), 2, 2)


def test_has_disjoint_paths_stops_early():
    assert has_disjoint_paths(complete(6), 0, 1, 3)
    assert not has_disjoint_paths(cycle(6), 0, 3, 3)


def test_min_vertex_cut_examples():
    c6 = min_vertex_cut(cycle(6), 0, 3)
    assert len(c6) == 2 and 0 in c6.source_side and 3 in c6.sink_side
    assert cut_separates(cycle(6), c6)
    assert min_vertex_cut(K23, 0, 1).cut == {2, 3, 4}
    assert min_vertex_cut(bowtie(), 0, 3).cut == {2}


def test_min_vertex_cut_errors():
    with pytest.raises(NotSeparableError):
        min_vertex_cut(cycle(6), 0, 1)
    with pytest.raises(InvalidInputError):
        min_vertex_cut(cycle(6), 0, 0)


@pytest.mark.parametrize("g, expected", [(complete(5), 4), (cycle(6), 2), (petersen(), 3)])
def test_global_connectivity(g, expected):
    assert global_vertex_connectivity(g) == expected


def test_petersen_oracle_agrees():
    # removing any two vertices leaves Petersen connected; some three do not
    assert brute_force_connectivity(petersen()) == 3


def test_global_connectivity_of_disconnected_graph_is_zero():
    assert global_vertex_connectivity(Graph(4, [(0, 1), (2, 3)])) == 0


@pytest.mark.parametrize(
    "g, k, expected",
    [
        (cycle(6), 2, True), (cycle(6), 3, False),
        (complete(5), 4, True), (complete(5), 5, False),
        (bowtie(), 2, False), (bowtie(), 1, True),
        (Graph(1), 1, True),
    ],
)
def test_is_k_connected(g, k, expected):
    assert is_k_connected(g, k) is expected


def test_find_i_separator_examples():
    assert find_i_separator(bowtie(), 1).cut == {2}
    c6 = find_i_separator(cycle(6), 2)
    assert len(c6) == 2 and cut_separates(cycle(6), c6)
    assert c6.cut == {1, 5}
    assert find_i_separator(complete(5), 3) is None


def test_find_i_separator_precondition():
    with pytest.raises(PreconditionError):
        find_i_separator(bowtie(), 2)


def test_separator_splitting_set_examples():
    assert separator_splitting_set(cycle(6), 1, {0, 3}) is None
    cut = separator_splitting_set(cycle(6), 2, {0, 3})
    assert len(cut) == 2 and cut_separates(cycle(6), cut)
    assert separator_splitting_set(bowtie(), 1, {0, 4}).cut == {2}


def test_menger_consistency_against_brute_force():
    for g in small_corpus(80, seed=3):
        for u, v in combinations(range(g.n), 2):
            if g.has_edge(u, v):
                continue
            expected = brute_force_min_separator_size(g, u, v)
            assert local_vertex_connectivity(g, u, v) == expected
            cut = min_vertex_cut(g, u, v)
            assert len(cut) == expected
            assert cut.cut | cut.source_side | cut.sink_side == set(range(g.n))
            assert not (cut.cut & cut.source_side or cut.cut & cut.sink_side or cut.source_side & cut.sink_side)
            assert u in cut.source_side and v in cut.sink_side
            assert not any(g.has_edge(a, b) for a in cut.source_side for b in cut.sink_side)
            assert cut_separates(g, cut)


def test_adjacent_pair_counts_match_networkx():
    rng = random.Random(5)
    for _ in range(60):
        g = random_graph(rng, rng.randint(3, 12), 0.5)
        h = nx.Graph(g.edges)
        h.add_nodes_from(range(g.n))
        for u, v in g.edges:
            h.remove_edge(u, v)
            expected = 1 + nx.node_connectivity(h, u, v)
            h.add_edge(u, v)
            assert local_vertex_connectivity(g, u, v) == expected


def test_global_connectivity_matches_oracle_on_corpus():
    for g in small_corpus(150, seed=8):
        if g.n >= 2:
            assert global_vertex_connectivity(g) == brute_force_connectivity(g)


def test_find_i_separator_is_first_separating_pair():
    for g in small_corpus(100, seed=21):
        if g.n < 2:
            continue
        kappa = brute_force_connectivity(g)
        if kappa == 0:
            continue
        cut = find_i_separator(g, kappa)
        pairs = [
            (u, v) for u, v in combinations(range(g.n), 2)
            if not g.has_edge(u, v) and brute_force_min_separator_size(g, u, v) == kappa
        ]
        if not pairs:
            assert cut is None
            continue
        u, v = pairs[0]
        assert len(cut) == kappa
        assert u in cut.source_side and v in cut.sink_side


def test_lemma1_adding_a_vertex_with_i_neighbours_keeps_connectivity():
    rng = random.Random(1)
    for trial in range(500):
        i = rng.randint(1, 4)
        n = rng.randint(i + 1, 14)
        g = gen_random_k_connected(n, i, rng.uniform(0, 0.3), trial)
        attach = rng.sample(range(n), rng.randint(i, n))
        g2 = Graph(n + 1, g.edges + [(v, n) for v in attach])
        assert is_k_connected(g2, i), (trial, g.edges, attach)


def test_cuts_from_separator_search_separate():
    rng = random.Random(4)
    for _ in range(200):
        g = random_graph(rng, rng.randint(4, 12), 0.45)
        b = rng.sample(range(g.n), rng.randint(2, g.n))
        for i in (1, 2, 3):
            cut = separator_splitting_set(g, i, b)
            if cut is None:
                continue
            assert len(cut) <= i
            comps = components_after_removal(g, cut.cut)
            hit = {idx for idx, comp in enumerate(comps) if comp & (set(b) - cut.cut)}
            assert len(hit) >= 2
