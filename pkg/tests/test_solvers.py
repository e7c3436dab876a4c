import random
from itertools import product

import pytest
from hypothesis import given, settings

from scdt.decompose import decompose
from scdt.errors import NoCvdConclusion, NonChordalInput
from scdt.generators import gen_planted
from scdt.graph import Graph, connected_components
from scdt.nice import refine_to_nice, with_apex
from scdt.oracles import BRUTE, brute_cvd, brute_vc, verify_fvs, verify_oct, verify_vc
from scdt.solvers import (
    FeedbackVertexSet,
    enumerate_bag_states,
    run_dp,
    set_partitions,
    solve_fvs,
    solve_oct,
    solve_vc,
    solve_vc_given_modulator,
)
from scdt.td import SemiCliqueBag

from conftest import graphs, rand_graph

SOLVE = {"VC": solve_vc, "FVS": solve_fvs, "OCT": solve_oct}


def two_triangles():
    return Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


# -- named examples ------------------------------------------------------------

@pytest.mark.parametrize("n", [1, 2, 3, 5, 7])
def test_vc_of_complete_graph(n):
    assert solve_vc(Graph.complete(n), 0).size == n - 1


def test_vc_examples():
    assert solve_vc(Graph.cycle(4), 1).size == 2
    assert solve_vc(Graph(0), 0).size == 0


def test_oct_examples():
    assert solve_oct(Graph.complete(3), 1).size == 1
    assert solve_oct(Graph.cycle(4), 1).size == 0
    assert solve_oct(Graph.complete(4), 0).size == 2


def test_fvs_examples():
    assert solve_fvs(Graph.complete(3), 0).size == 1
    assert solve_fvs(Graph.complete(4), 0).size == 2
    assert solve_fvs(two_triangles(), 0).size == 2
    tree = Graph(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)])
    assert solve_fvs(tree, 0).size == 0


def test_fvs_counters():
    sol = solve_fvs(two_triangles(), 0)
    st = sol.stats
    assert st["survivors_with_apex"] == 6 + 1 - sol.size
    assert st["forest_edges"] == st["survivors_with_apex"] - 1


def test_target_reports_decision():
    sol = solve_vc(Graph.complete(4), 0, target=2)
    assert sol.size == 3 and sol.meets_target is False
    assert solve_vc(Graph.complete(4), 0, target=3).meets_target is True


def test_refuted_promise_propagates():
    # K_{4,4} needs three deletions to become chordal
    g = Graph(8, [(u, v) for u in range(4) for v in range(4, 8)])
    try:
        sol = solve_vc(g, 0)
    except NoCvdConclusion as exc:
        assert exc.k == 0
        return
    assert sol.size == 4


# -- oracle equivalence ------------------------------------------------------

def check_all(g, k):
    for kind, solve in SOLVE.items():
        try:
            sol = solve(g, k, check=True)
        except NoCvdConclusion:
            return False
        assert sol.size == BRUTE[kind](g, 18).size, kind
    return True


@settings(max_examples=60)
@given(graphs(max_n=10))
def test_solvers_match_brute_force(g):
    k = brute_cvd(g).size
    assert check_all(g, k)


def test_planted_match_brute_force():
    rng = random.Random(6)
    for seed in range(15):
        k = rng.randint(0, 2)
        inst = gen_planted(rng.randint(k + 1, 14), k, rng.random(), seed)
        assert check_all(inst.graph, k)


def test_vc_tables_respect_caps():
    for seed in range(10):
        inst = gen_planted(16, 2, 0.6, seed)
        solve_vc(inst.graph, 2, check=True)
        solve_oct(inst.graph, 2, check=True)


def test_lazy_and_full_apex_agree():
    for seed in range(12):
        g = rand_graph(9, 0.45, seed)
        k = brute_cvd(g).size
        td = decompose(g, k)
        td2, g2 = with_apex(td, g)
        nd = refine_to_nice(td2, g2)
        lazy = run_dp(FeedbackVertexSet(g2, g.n), nd)
        full = run_dp(FeedbackVertexSet(g2, g.n, lazy_apex=False), nd)
        assert lazy.cost == full.cost
        assert verify_fvs(g, lazy.solution) and verify_fvs(g, full.solution)
        assert lazy.max_table <= full.max_table


def test_witness_forest_edge_count():
    for seed in range(10):
        g = rand_graph(10, 0.4, seed + 50)
        sol = solve_fvs(g, brute_cvd(g).size)
        keep = [v for v in range(g.n) if v not in sol.vertices]
        edges = sum(1 for u, v in g.edges() if u in keep and v in keep)
        comps = len(connected_components(g, keep))
        assert edges == len(keep) - comps


def test_adding_an_edge_never_lowers_optimum():
    rng = random.Random(12)
    for seed in range(15):
        g = rand_graph(9, 0.35, seed + 200)
        missing = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
        if not missing:
            continue
        h = Graph(g.n, g.edges() + [rng.choice(missing)])
        kg, kh = brute_cvd(g).size, brute_cvd(h).size
        for solve in SOLVE.values():
            assert solve(h, kh).size >= solve(g, kg).size


# -- modulator path ----------------------------------------------------------

def test_modulator_examples():
    assert solve_vc_given_modulator(Graph.complete(4), [0]).size == 3
    assert solve_vc_given_modulator(Graph.cycle(4), [0]).size == 2
    with pytest.raises(NonChordalInput):
        solve_vc_given_modulator(Graph.cycle(5), [])


@given(graphs(max_n=12))
def test_modulator_empty_on_chordal(g):
    try:
        sol = solve_vc_given_modulator(g, [])
    except NonChordalInput:
        return
    assert verify_vc(g, sol.vertices)
    assert sol.size == brute_vc(g).size


def test_modulator_agrees_with_dp():
    for seed in range(20):
        inst = gen_planted(18, 3, 0.5, seed)
        a = solve_vc_given_modulator(inst.graph, inst.modulator)
        b = solve_vc(inst.graph, 3)
        assert a.size == b.size and verify_vc(inst.graph, a.vertices)


# -- explicit state enumeration ------------------------------------------------

def test_vc_state_counts():
    assert len(list(enumerate_bag_states(SemiCliqueBag.build([range(5)]), "VC"))) == 6
    assert len(list(enumerate_bag_states(SemiCliqueBag.build([], [0, 1]), "VC"))) == 4


def direct_oct_count(clique):
    n = 0
    for lab in product((1, 2, 3), repeat=len(clique)):
        if sum(x != 3 for x in lab) <= 2:
            n += 1
    return n


def test_oct_and_fvs_counts_match_filtering():
    bag = SemiCliqueBag.build([range(4)])
    oct_states = list(enumerate_bag_states(bag, "OCT"))
    assert len(oct_states) == direct_oct_count(range(4)) == 33
    assert len(set(oct_states)) == len(oct_states)
    fvs_states = list(enumerate_bag_states(bag, "FVS"))
    # survivor sets of size 0, 1, 2 with all partitions
    assert len(fvs_states) == 1 + 4 + 6 * 2 == 17
    assert len(set(fvs_states)) == len(fvs_states)


def test_mixed_bag_counts():
    bag = SemiCliqueBag.build([[0, 1, 2], [3, 4]], [5, 6])
    vc = list(enumerate_bag_states(bag, "VC"))
    assert len(vc) == 4 * 3 * 4 == len(set(vc))
    oct_states = list(enumerate_bag_states(bag, "OCT"))
    expect = direct_oct_count([0, 1, 2]) * direct_oct_count([3, 4]) * 9
    assert len(oct_states) == expect
    assert list(enumerate_bag_states(bag, "VC")) == vc


def test_set_partitions_are_bell_numbers():
    assert [sum(1 for _ in set_partitions(list(range(n)))) for n in range(6)] == [1, 1, 2, 5, 15, 52]


def test_witnesses_are_valid():
    g = gen_planted(14, 2, 0.5, 77).graph
    assert verify_vc(g, solve_vc(g, 2).vertices)
    assert verify_oct(g, solve_oct(g, 2).vertices)
    assert verify_fvs(g, solve_fvs(g, 2).vertices)
