import networkx as nx
import pytest
from hypothesis import given

from scdt.errors import InputError, NoSolution, TooLarge
from scdt.generators import HittingSetInstance
from scdt.graph import Graph
from scdt.oracles import (
    OracleBudget,
    brute_cvd,
    brute_fvs,
    brute_hitting_set,
    brute_maximal_cliques,
    brute_min_separator,
    brute_multiway_cut,
    brute_oct,
    brute_vc,
    uncovered_edges,
    verify_cvd,
    verify_fvs,
    verify_oct,
    verify_solution,
    verify_vc,
)
from scdt.solution import Solution

from conftest import graphs, petersen, to_nx


def test_named_optima():
    assert brute_vc(Graph.complete(4)).size == 3
    assert brute_cvd(Graph.cycle(4)).size == 1
    assert brute_oct(petersen()).size == 3
    assert brute_fvs(Graph.complete(4)).size == 2
    assert brute_oct(Graph.cycle(5)).size == 1


def test_verifier_examples():
    tri = Graph.complete(3)
    assert verify_vc(tri, {0, 1}) and verify_vc(tri, {1, 2})
    assert not verify_fvs(tri, set())
    assert verify_cvd(Graph.cycle(5), {2})
    assert not verify_cvd(Graph.cycle(5), set())
    assert verify_oct(Graph.cycle(4), set()) and not verify_oct(tri, set())


def test_uncovered_edges_named():
    assert uncovered_edges(Graph.path(4), {1}) == [(2, 3)]
    assert verify_solution(Graph.path(4), Solution("VC", {1, 2}))


def test_witness_is_lexicographically_first():
    assert brute_vc(Graph.path(3)).vertices == frozenset({1})
    assert brute_cvd(Graph.cycle(4)).vertices == frozenset({0})


def test_budget_refuses_large_inputs():
    with pytest.raises(TooLarge):
        brute_vc(Graph(19))
    with pytest.raises(TooLarge):
        brute_fvs(Graph(17))
    with pytest.raises(TooLarge):
        brute_oct(Graph(8), 5)
    assert brute_oct(Graph(17), OracleBudget(17)).size == 0


def test_separator_examples():
    c4 = Graph.cycle(4)
    assert len(brute_min_separator(c4, [0], [2], allow_terminals=False)) == 2
    apart = Graph(4, [(0, 1), (2, 3)])
    assert brute_min_separator(apart, [0], [2]) == frozenset()
    with pytest.raises(NoSolution):
        brute_multiway_cut(Graph.complete(3), [0, 1, 2])
    with pytest.raises(NoSolution):
        brute_min_separator(Graph.path(2), [0], [1], allow_terminals=False)


def test_multiway_examples():
    apart = Graph(6, [(0, 1), (2, 3), (4, 5)])
    assert brute_multiway_cut(apart, [0, 2, 4]) == frozenset()
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    assert brute_multiway_cut(star, [1, 2, 3]) == frozenset({0})
    with pytest.raises(NoSolution):
        brute_multiway_cut(Graph.cycle(6), [0, 2, 4], 2)


def test_hitting_set_oracle():
    hs = HittingSetInstance(3, (frozenset({0}), frozenset({0, 1}), frozenset({2})))
    assert brute_hitting_set(hs) == frozenset({0, 2})
    with pytest.raises(InputError):
        HittingSetInstance(2, (frozenset(),))


@given(graphs(max_n=9))
def test_oracles_match_networkx_facts(g):
    h = to_nx(g)
    vc = brute_vc(g)
    assert verify_vc(g, vc.vertices)
    assert vc.size == g.n - max((len(c) for c in nx.find_cliques(nx.complement(h))), default=0)
    assert verify_fvs(g, brute_fvs(g).vertices)
    assert verify_oct(g, brute_oct(g).vertices)
    assert (brute_cvd(g).size == 0) == nx.is_chordal(h)


@given(graphs(max_n=10))
def test_checkers_agree_with_networkx(g):
    h = to_nx(g)
    for x in (set(), {0}, set(range(0, g.n, 2))):
        x = {v for v in x if v < g.n}
        rest = h.subgraph(set(range(g.n)) - x)
        if not rest.number_of_nodes():
            continue
        assert verify_fvs(g, x) == nx.is_forest(rest)
        assert verify_oct(g, x) == nx.is_bipartite(rest)
        assert verify_cvd(g, x) == nx.is_chordal(rest)


@given(graphs(max_n=9))
def test_brute_cliques_match_networkx(g):
    ours = sorted(map(sorted, brute_maximal_cliques(g)))
    theirs = sorted(map(sorted, nx.find_cliques(to_nx(g)))) if g.n else []
    assert ours == theirs
