import networkx as nx
import pytest
from hypothesis import given

from scdt.errors import InputError
from scdt.graph import (
    Graph,
    component_masks,
    connected_components,
    induced_subgraph,
    iter_bits,
    mask_of,
    open_neighborhood,
    reachable_mask,
)

from conftest import graphs, to_nx


def test_basic_shape():
    g = Graph(4, [(0, 1), (2, 1), (1, 0)])
    assert g.m == 2
    assert g.edges() == [(0, 1), (1, 2)]
    assert g.neighbors(1) == frozenset({0, 2})
    assert g.degree(3) == 0
    assert g.has_edge(2, 1) and not g.has_edge(0, 2)


def test_rejects_bad_edges():
    with pytest.raises(InputError):
        Graph(3, [(0, 0)])
    with pytest.raises(InputError):
        Graph(3, [(0, 3)])
    with pytest.raises(InputError):
        Graph(-1)


def test_named_families():
    assert Graph.complete(5).m == 10
    assert Graph.cycle(6).m == 6
    assert Graph.path(6).m == 5
    assert Graph.complete(4).is_clique(range(4))
    assert not Graph.cycle(4).is_clique([0, 2])


def test_bits_roundtrip():
    assert list(iter_bits(mask_of([5, 0, 3]))) == [0, 3, 5]
    assert mask_of([]) == 0


def test_add_vertex_is_universal():
    g = Graph.path(3).add_vertex([0, 1, 2])
    assert g.n == 4 and g.neighbors(3) == frozenset({0, 1, 2})
    assert g.m == 5


def test_induced_subgraph_mapping():
    g = Graph.cycle(5)
    sub, back = induced_subgraph(g, [4, 0, 1])
    assert back == (0, 1, 4)
    assert sorted((back[u], back[v]) for u, v in sub.edges()) == [(0, 1), (0, 4)]


def test_open_neighborhood_and_range():
    g = Graph.path(5)
    assert open_neighborhood(g, [1, 2]) == frozenset({0, 3})
    with pytest.raises(InputError):
        open_neighborhood(g, [7])


def test_equality_and_hash():
    assert Graph(3, [(0, 1)]) == Graph(3, [(1, 0)])
    assert hash(Graph(3, [(0, 1)])) == hash(Graph(3, [(1, 0)]))
    assert Graph(3, [(0, 1)]) != Graph(4, [(0, 1)])


@given(graphs(max_n=12))
def test_components_match_networkx(g):
    ours = sorted(sorted(c) for c in connected_components(g))
    theirs = sorted(sorted(c) for c in nx.connected_components(to_nx(g)))
    assert ours == theirs
    masks = component_masks(g, g.full_mask)
    assert [min(iter_bits(m)) for m in masks] == sorted(min(iter_bits(m)) for m in masks)


@given(graphs(min_n=1, max_n=10))
def test_reachable_is_component(g):
    comp = reachable_mask(g, 1, g.full_mask)
    assert frozenset(iter_bits(comp)) == next(c for c in connected_components(g) if 0 in c)
