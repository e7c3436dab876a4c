import random

import pytest

from scdt.decompose import decompose
from scdt.errors import InputError
from scdt.generators import gen_planted
from scdt.graph import Graph
from scdt.nice import FORGET, INTRODUCE, INTRODUCE_EDGE, JOIN, LEAF, refine_to_nice, validate_nice, with_apex
from scdt.td import SemiCliqueBag, SemiCliqueTreeDecomposition, validate_td


def single_bag(cliques, rest=()):
    return SemiCliqueTreeDecomposition([SemiCliqueBag.build(cliques, rest)], [None], 0, (4, 5))


def test_triangle_in_one_bag():
    g = Graph.complete(3)
    nd = refine_to_nice(single_bag([[0, 1, 2]]), g)
    kinds = [node.kind for node in nd.nodes]
    assert kinds.count(LEAF) == 1
    assert kinds.count(INTRODUCE) == 3
    assert kinds.count(INTRODUCE_EDGE) == 3
    assert kinds.count(FORGET) == 3
    assert len(nd) == 10
    assert not nd.nodes[nd.root].bag.vertices
    assert validate_nice(g, nd).ok


def test_two_bag_path_has_no_join():
    g = Graph.path(3)
    td = SemiCliqueTreeDecomposition([SemiCliqueBag.build([], [0, 1]), SemiCliqueBag.build([], [1, 2])],
                                     [None, 0], 0, (4, 5))
    nd = refine_to_nice(td, g)
    assert nd.count(JOIN) == 0 and nd.count(LEAF) == 1
    assert nd.count(FORGET) == 3 and nd.count(INTRODUCE_EDGE) == 2
    assert validate_nice(g, nd).ok


def test_slots_survive_refinement():
    g = Graph.complete(3)
    nd = refine_to_nice(single_bag([[0, 1, 2]]), g)
    for node in nd.nodes:
        assert node.bag.rest == frozenset()
        assert node.bag.cliques[0] == node.bag.vertices


def test_star_of_bags_gets_joins():
    g = Graph(4, [(0, 1), (0, 2), (0, 3)])
    bags = [SemiCliqueBag.build([], [0])] + [SemiCliqueBag.build([], [0, v]) for v in (1, 2, 3)]
    td = SemiCliqueTreeDecomposition(bags, [None, 0, 0, 0], 0, (4, 5))
    nd = refine_to_nice(td, g)
    assert nd.count(JOIN) == 2
    for node in nd.nodes:
        if node.kind == JOIN:
            assert all(nd.nodes[c].bag == node.bag for c in node.children)
    assert validate_nice(g, nd).ok


def test_invalid_input_rejected():
    g = Graph.path(3)
    with pytest.raises(InputError):
        refine_to_nice(single_bag([], [0, 1]), g)


def test_planted_refinements_are_valid_and_small():
    rng = random.Random(4)
    for seed in range(20):
        k = rng.randint(0, 2)
        g = gen_planted(rng.randint(5, 35), k, rng.random(), seed).graph
        td = decompose(g, k)
        nd = refine_to_nice(td, g)
        report = validate_nice(g, nd)
        assert report.ok, list(report)
        width = max(len(b) for b in td.bags)
        assert len(nd) <= len(td) * (2 * width + 2) + g.m + 1
        assert nd.count(INTRODUCE_EDGE) == g.m
        assert nd.count(FORGET) == g.n


def test_validate_nice_catches_missing_edge():
    g = Graph.complete(3)
    nd = refine_to_nice(single_bag([[0, 1, 2]]), g)
    bigger = Graph(3, [(0, 1), (0, 2), (1, 2)])
    assert validate_nice(bigger, nd).ok
    assert not validate_nice(Graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)]), nd).ok


def test_apex_joins_every_bag():
    inst = gen_planted(15, 1, 0.5, 2)
    td = decompose(inst.graph, 1)
    td2, g2 = with_apex(td, inst.graph)
    v0 = inst.graph.n
    assert g2.n == v0 + 1 and g2.degree(v0) == v0
    assert all(v0 in b.rest for b in td2.bags)
    assert td2.budget == (4, td.budget[1] + 1)
    assert validate_td(g2, td2).ok
