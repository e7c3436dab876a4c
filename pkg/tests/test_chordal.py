import networkx as nx
import pytest
from hypothesis import given

from scdt.chordal import (
    CliqueBudget,
    chordal_max_independent_set,
    chordal_maximal_cliques,
    clique_tree,
    enumerate_maximal_cliques,
    find_chordless_cycle,
    is_chordal,
    iter_maximal_cliques,
    modulator_semi_clique_td,
)
from scdt.errors import BudgetExceeded, InputError, NoCvdConclusion, NonChordalInput
from scdt.generators import gen_planted
from scdt.graph import Graph, induced_subgraph, iter_bits
from scdt.td import validate_td

from conftest import graphs, to_nx


def _is_induced_cycle(g, cyc):
    k = len(cyc)
    if k < 4 or len(set(cyc)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            adjacent = j == i + 1 or (i == 0 and j == k - 1)
            if g.has_edge(cyc[i], cyc[j]) != adjacent:
                return False
    return True


def test_complete_graph_is_chordal():
    ok, peo = is_chordal(Graph.complete(4))
    assert ok and peo.is_perfect_for(Graph.complete(4))


def test_c5_gives_witness():
    g = Graph.cycle(5)
    ok, cyc = is_chordal(g)
    assert not ok
    assert sorted(cyc) == [0, 1, 2, 3, 4]
    assert _is_induced_cycle(g, cyc)


def test_empty_and_tiny():
    assert is_chordal(Graph(0))[0]
    assert is_chordal(Graph(1))[0]
    assert find_chordless_cycle(Graph.path(6)) is None


@given(graphs(max_n=10))
def test_chordality_matches_networkx(g):
    ok, cert = is_chordal(g)
    assert ok == nx.is_chordal(to_nx(g))
    if ok:
        assert cert.is_perfect_for(g)
    else:
        assert _is_induced_cycle(g, cert)


def test_clique_tree_of_two_triangles():
    g = Graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    td = clique_tree(g)
    assert sorted(sorted(b.cliques[0]) for b in td.bags) == [[0, 1, 2], [1, 2, 3]]
    assert validate_td(g, td).ok
    assert td.budget == (1, 0)


def test_clique_tree_rejects_cycle():
    with pytest.raises(NonChordalInput) as info:
        clique_tree(Graph.cycle(4))
    assert len(info.value.cycle) == 4


@given(graphs(max_n=10))
def test_clique_tree_valid_on_chordal_graphs(g):
    if not is_chordal(g)[0]:
        return
    td = clique_tree(g)
    assert validate_td(g, td).ok
    expect = sorted(sorted(c) for c in nx.find_cliques(to_nx(g))) if g.n else [[]]
    assert sorted(sorted(b.cliques[0]) for b in td.bags) == expect


def test_modulator_decomposition():
    inst = gen_planted(15, 2, 0.5, seed=4)
    td = modulator_semi_clique_td(inst.graph, inst.modulator)
    assert td.budget == (1, 2)
    assert validate_td(inst.graph, td).ok
    assert all(b.rest == inst.modulator for b in td.bags)


def test_modulator_must_leave_chordal_graph():
    with pytest.raises(NonChordalInput):
        modulator_semi_clique_td(Graph.cycle(5), [])


def test_octahedron_cliques_and_budget():
    # K_{2,2,2}: 8 maximal triangles, CVD 2
    g = Graph(6, [(u, v) for u in range(6) for v in range(u + 1, 6) if v - u != 3])
    assert len(enumerate_maximal_cliques(g, 3)) == 8
    with pytest.raises(BudgetExceeded) as info:
        enumerate_maximal_cliques(g, 0)
    assert isinstance(info.value, NoCvdConclusion)


def test_budget_object():
    assert CliqueBudget(3, 10).limit == 80
    with pytest.raises(InputError):
        CliqueBudget(-1, 4)


@given(graphs(max_n=12))
def test_enumeration_matches_networkx(g):
    ours = sorted(sorted(c) for c in enumerate_maximal_cliques(g, CliqueBudget(g.n, max(g.n, 1))))
    theirs = sorted(sorted(c) for c in nx.find_cliques(to_nx(g))) if g.n else []
    assert ours == theirs


def test_enumeration_deterministic():
    g = gen_planted(20, 2, 0.6, seed=1).graph
    assert list(iter_maximal_cliques(g)) == list(iter_maximal_cliques(g))


def test_chordal_maximal_cliques_consistent():
    g = gen_planted(25, 0, 0.5, seed=9).graph
    assert sorted(map(sorted, chordal_maximal_cliques(g))) == sorted(map(sorted, enumerate_maximal_cliques(g, 0)))


@given(graphs(max_n=10))
def test_chordal_independent_set_is_maximum(g):
    if not is_chordal(g)[0]:
        return
    mis = chordal_max_independent_set(g)
    chosen = list(iter_bits(mis))
    assert all(not g.has_edge(u, v) for u in chosen for v in chosen if u < v)
    comp = nx.complement(to_nx(g))
    best = max((len(c) for c in nx.find_cliques(comp)), default=0)
    assert len(chosen) == best


def test_planted_part_is_chordal():
    inst = gen_planted(30, 3, 0.5, seed=2)
    keep = [v for v in range(30) if v not in inst.modulator]
    assert is_chordal(induced_subgraph(inst.graph, keep)[0])[0]
