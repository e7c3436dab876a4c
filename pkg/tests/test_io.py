import io
import json
import random

import pytest

from scdt import io as sio
from scdt.decompose import decompose
from scdt.errors import ParseError, ValidationError
from scdt.generators import gen_planted
from scdt.graph import Graph
from scdt.solution import Solution


def test_parse_triangle():
    g = sio.parse_graph("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n")
    assert g == Graph.complete(3)


def test_comments_and_blank_lines():
    g = sio.parse_graph("c hello\n\np edge 2 1\nc mid\ne 2 1\n")
    assert g.edges() == [(0, 1)]


@pytest.mark.parametrize("text, needle, line", [
    ("p edge 2 1\ne 1 1\n", "self-loop", 2),
    ("p edge 3 2\ne 1 2\ne 2 1\n", "duplicate", 3),
    ("p edge 2 1\ne 1 3\n", "range", 2),
    ("p edge 3 2\ne 1 2\n", "", 0),
    ("e 1 2\n", "", 1),
    ("p edge 2 1\nx 1 2\n", "", 2),
    ("p edge 2 1\ne 1 two\n", "", 2),
])
def test_parse_errors_carry_lines(text, needle, line):
    with pytest.raises(ParseError) as info:
        sio.parse_graph(text)
    assert needle in str(info.value)
    if line:
        assert info.value.line == line


def test_write_sorts_edges():
    g = Graph(3, [(2, 1), (0, 2)])
    assert sio.format_graph(g) == "p edge 3 2\ne 1 3\ne 2 3\n"


def test_graph_round_trips():
    rng = random.Random(0)
    for seed in range(1000):
        n = rng.randint(0, 25)
        g = Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.3))
        assert sio.parse_graph(sio.format_graph(g, [f"seed {seed}"])) == g


def test_file_round_trip(tmp_path):
    g = gen_planted(20, 2, 0.5, 1).graph
    path = tmp_path / "g.txt"
    sio.write_graph(g, path)
    assert sio.read_graph(path) == g
    buf = io.StringIO()
    sio.write_graph(g, buf)
    assert sio.read_graph(io.StringIO(buf.getvalue())) == g


def test_decomposition_round_trip(tmp_path):
    for seed in range(10):
        g = gen_planted(25, 2, 0.5, seed).graph
        td = decompose(g, 2)
        path = tmp_path / f"td{seed}.json"
        sio.write_decomposition(td, path)
        back = sio.read_decomposition(path, g)
        assert back.bags == td.bags and back.parent == td.parent
        assert back.k == td.k and back.budget == td.budget


def test_empty_graph_decomposition():
    td = decompose(Graph(0), 0)
    back = sio.read_decomposition(io.StringIO(sio.format_decomposition(td)), Graph(0))
    assert len(back) == 1 and len(back.bags[0]) == 0 and back.parent == [None]


def test_corrupted_budget_rejected():
    g = gen_planted(30, 1, 0.6, 3).graph
    data = sio.decomposition_to_dict(decompose(g, 1))
    widest = max(len(nd["N"]) for nd in data["nodes"])
    data["budget"] = [4, widest - 1]
    with pytest.raises(ValidationError) as info:
        sio.read_decomposition(io.StringIO(json.dumps(data)))
    assert any("budget" in v for v in info.value.violations)


def test_tampered_bag_needs_graph_to_spot():
    g = Graph.path(4)
    td = decompose(g, 0)
    data = sio.decomposition_to_dict(td)
    for nd in data["nodes"]:
        for key in ("C1", "C2", "C3", "C4", "N"):
            nd[key] = [v for v in nd[key] if v != 2]
    text = json.dumps(data)
    sio.read_decomposition(io.StringIO(text))
    with pytest.raises(ValidationError):
        sio.read_decomposition(io.StringIO(text), g)


def test_malformed_decompositions():
    with pytest.raises(ParseError):
        sio.read_decomposition(io.StringIO("{not json"))
    with pytest.raises(ParseError):
        sio.read_decomposition(io.StringIO('{"nodes": [{"id": 3}]}'))
    with pytest.raises(ParseError):
        sio.read_decomposition(io.StringIO('{"nodes": [{"id": 0, "N": [0]}]}'))
    with pytest.raises(ValidationError):
        sio.read_decomposition(io.StringIO('{"nodes": [{"id": 0, "parent": 0}]}'))


def test_solution_round_trip(tmp_path):
    sol = Solution("FVS", {0, 4, 2})
    path = tmp_path / "s.json"
    sio.write_solution(sol, path)
    assert sio.read_solution(path) == sol
    plain = tmp_path / "s.txt"
    plain.write_text("1 3, 5\n")
    assert sio.read_solution(plain, "fvs").vertices == frozenset({0, 2, 4})
    with pytest.raises(ParseError):
        sio.read_solution(plain)
    bad = tmp_path / "b.json"
    bad.write_text('{"kind": "VC", "vertices": [1, 2], "size": 3}')
    with pytest.raises(ParseError):
        sio.read_solution(bad)


def test_vertex_lists_and_sets(tmp_path):
    path = tmp_path / "m"
    sio.write_vertex_list({3, 0}, path)
    assert path.read_text() == "1 4\n"
    assert sio.read_vertex_list(path) == frozenset({0, 3})
    with pytest.raises(ParseError):
        sio.parse_vertex_list("1 0")
    sets = tmp_path / "sets"
    sets.write_text("1\n# note\n1 2\n")
    assert sio.read_sets(sets) == [frozenset({0}), frozenset({0, 1})]
    sets.write_text("1\nfoo\n")
    with pytest.raises(ParseError) as info:
        sio.read_sets(sets)
    assert info.value.line == 2


def test_digest_is_stable():
    assert sio.digest("abc") == sio.digest("abc") != sio.digest("abd")
