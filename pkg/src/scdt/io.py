"""Graph, decomposition, solution and vertex-list files.

On disk, vertex ids are 1-based; in memory they are 0-based.

Graph files follow a DIMACS-like grammar::

    c optional comment
    p edge <n> <m>
    e <u> <v>

Decomposition files are JSON::

    {"k": 1, "budget": [4, 12],
     "nodes": [{"id": 0, "parent": null, "C1": [..], "C2": [], "C3": [], "C4": [], "N": [..]}, ...]}
"""

from __future__ import annotations

import hashlib
import json
import os
from collections.abc import Iterable
from typing import IO, Union

from .errors import ParseError, ValidationError
from .graph import Graph
from .solution import Solution
from .td import SemiCliqueBag, SemiCliqueTreeDecomposition, check_bag_structure, check_tree_shape, validate_td

Source = Union[str, os.PathLike, IO[str]]


def _read_text(src: Source) -> str:
    if hasattr(src, "read"):
        return src.read()
    with open(src, encoding="utf-8") as fh:
        return fh.read()


def _write_text(dst: Source, text: str) -> None:
    if hasattr(dst, "write"):
        dst.write(text)
        return
    with open(dst, "w", encoding="utf-8") as fh:
        fh.write(text)


def parse_graph(text: str) -> Graph:
    n = m = None
    header_line = 0
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise ParseError("second header line", lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError("header must read 'p edge <n> <m>'", lineno)
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError("header counts must be integers", lineno) from None
            if n < 0 or m < 0:
                raise ParseError("header counts must be non-negative", lineno)
            header_line = lineno
        elif tag == "e":
            if n is None:
                raise ParseError("edge line before the header", lineno)
            if len(parts) != 3:
                raise ParseError("edge line must read 'e <u> <v>'", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError("edge endpoints must be integers", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"endpoint out of range 1..{n}", lineno)
            if u == v:
                raise ParseError(f"self-loop on vertex {u}", lineno)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ParseError(f"duplicate edge {key[0]}-{key[1]}", lineno)
            seen.add(key)
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unknown line type {tag!r}", lineno)
    if n is None:
        raise ParseError("missing 'p edge' header", 0)
    if len(edges) != m:
        raise ParseError(f"header promises {m} edges, found {len(edges)}", header_line)
    return Graph(n, edges)


def format_graph(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p edge {g.n} {g.m}")
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def read_graph(src: Source) -> Graph:
    return parse_graph(_read_text(src))


def write_graph(g: Graph, dst: Source, comments: Iterable[str] = ()) -> None:
    _write_text(dst, format_graph(g, comments))


def decomposition_to_dict(td: SemiCliqueTreeDecomposition) -> dict:
    nodes = []
    for t, bag in enumerate(td.bags):
        node = {"id": t, "parent": td.parent[t]}
        for i, c in enumerate(bag.cliques):
            node[f"C{i + 1}"] = sorted(v + 1 for v in c)
        node["N"] = sorted(v + 1 for v in bag.rest)
        nodes.append(node)
    return {"k": td.k, "budget": list(td.budget), "nodes": nodes}


def _ids(node: dict, key: str, where: int) -> frozenset[int]:
    val = node.get(key, [])
    if not isinstance(val, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in val):
        raise ParseError(f"node {where}: field {key} must be a list of integers", 0)
    if any(v < 1 for v in val):
        raise ParseError(f"node {where}: field {key} has ids below 1", 0)
    return frozenset(v - 1 for v in val)


def decomposition_from_dict(data: dict) -> SemiCliqueTreeDecomposition:
    if not isinstance(data, dict) or "nodes" not in data:
        raise ParseError("decomposition object needs a 'nodes' list", 0)
    try:
        k = int(data.get("k", 0))
        budget = tuple(int(x) for x in data.get("budget", (4, 7 * k + 5)))
    except (TypeError, ValueError):
        raise ParseError("'k' and 'budget' must be integers", 0) from None
    if len(budget) != 2:
        raise ParseError("'budget' must be a pair [c, l]", 0)
    raw = data["nodes"]
    if not isinstance(raw, list):
        raise ParseError("'nodes' must be a list", 0)
    ids = [nd.get("id") if isinstance(nd, dict) else None for nd in raw]
    if sorted(ids, key=lambda x: (x is None, x if isinstance(x, int) else 0)) != list(range(len(raw))):
        raise ParseError("node ids must be exactly 0..len(nodes)-1", 0)
    bags: list[SemiCliqueBag | None] = [None] * len(raw)
    parent: list[int | None] = [None] * len(raw)
    for nd in raw:
        t = nd["id"]
        p = nd.get("parent")
        if p is not None and not isinstance(p, int):
            raise ParseError(f"node {t}: parent must be an integer or null", 0)
        parent[t] = p
        cliques = tuple(_ids(nd, f"C{i}", t) for i in range(1, 5))
        bags[t] = SemiCliqueBag(cliques, _ids(nd, "N", t))
    return SemiCliqueTreeDecomposition(bags, parent, k, (budget[0], budget[1]))


def format_decomposition(td: SemiCliqueTreeDecomposition) -> str:
    return json.dumps(decomposition_to_dict(td), indent=1) + "\n"


def write_decomposition(td: SemiCliqueTreeDecomposition, dst: Source) -> None:
    _write_text(dst, format_decomposition(td))


def read_decomposition(src: Source, graph: Graph | None = None) -> SemiCliqueTreeDecomposition:
    """Parse a decomposition file.

    Tree shape, slot disjointness and the declared budget are always checked;
    with ``graph`` the full ``validate_td`` runs as well.  Problems raise
    ``ValidationError`` carrying the violation list.
    """
    try:
        data = json.loads(_read_text(src))
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    td = decomposition_from_dict(data)
    problems = [f"tree: {p}" for p in check_tree_shape(td.parent)]
    for t, bag in enumerate(td.bags):
        problems += [f"{kind} at node {t}: {detail}" for kind, detail in check_bag_structure(bag, td.budget)]
    if not problems and graph is not None:
        problems = [str(v) for v in validate_td(graph, td)]
    if problems:
        raise ValidationError("decomposition failed validation", problems)
    return td


def solution_to_dict(sol: Solution) -> dict:
    return {"kind": sol.kind, "vertices": [v + 1 for v in sol.sorted_vertices()], "size": sol.size}


def write_solution(sol: Solution, dst: Source) -> None:
    _write_text(dst, json.dumps(solution_to_dict(sol)) + "\n")


def read_solution(src: Source, kind: str | None = None) -> Solution:
    """Read a solution file: JSON ``{kind, vertices, size}`` or a bare list of ids."""
    text = _read_text(src)
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        data = None
    if not isinstance(data, (dict, list)):
        if kind is None:
            raise ParseError("plain vertex lists need an explicit kind", 0)
        return Solution(kind, parse_vertex_list(text))
    if isinstance(data, list):
        data = {"vertices": data}
    if not isinstance(data, dict) or not isinstance(data.get("vertices"), list):
        raise ParseError("solution needs a 'vertices' list", 0)
    kind = kind or data.get("kind")
    if kind is None:
        raise ParseError("solution kind missing", 0)
    verts = data["vertices"]
    if not all(isinstance(v, int) and v >= 1 for v in verts):
        raise ParseError("solution vertices must be 1-based integers", 0)
    if "size" in data and data["size"] != len(set(verts)):
        raise ParseError("declared size does not match the vertex list", 0)
    return Solution(kind, frozenset(v - 1 for v in verts))


def parse_vertex_list(text: str) -> frozenset[int]:
    out = set()
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0]
        for tok in body.replace(",", " ").split():
            try:
                v = int(tok)
            except ValueError:
                raise ParseError(f"not a vertex id: {tok!r}", lineno) from None
            if v < 1:
                raise ParseError(f"vertex ids are 1-based, got {v}", lineno)
            out.add(v - 1)
    return frozenset(out)


def read_vertex_list(src: Source) -> frozenset[int]:
    return parse_vertex_list(_read_text(src))


def write_vertex_list(vs: Iterable[int], dst: Source) -> None:
    _write_text(dst, " ".join(str(v + 1) for v in sorted(vs)) + "\n")


def read_sets(src: Source) -> list[frozenset[int]]:
    """One set per non-empty line, whitespace-separated 1-based element ids."""
    sets = []
    for lineno, line in enumerate(_read_text(src).splitlines(), 1):
        body = line.split("#", 1)[0].strip()
        if body:
            try:
                sets.append(parse_vertex_list(body))
            except ParseError as exc:
                raise ParseError(exc.detail, lineno) from None
    return sets


def digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()
