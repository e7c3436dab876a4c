"""Bottom-up table evaluation over a nice decomposition, plus witness recovery."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable

from ..graph import Graph
from ..nice import FORGET, INTRODUCE, INTRODUCE_EDGE, JOIN, LEAF, NiceDecomposition

# a table maps each state to (cost, back pointer); cost = deleted vertices so far
Table = dict


class DpProblem:
    """Per-node transitions of one optimisation problem.

    Costs count solution vertices among those introduced so far.  Subclasses
    fill in the five transitions; the engine handles ordering, the per-clique
    cap filter and witness recovery.
    """

    kind = ""

    def __init__(self, g: Graph):
        self.g = g

    def leaf(self) -> Table:
        raise NotImplementedError

    def introduce(self, table: Table, v: int, child_bag: int, slots: tuple[int, ...]) -> Table:
        raise NotImplementedError

    def introduce_edge(self, table: Table, u: int, w: int) -> Table:
        raise NotImplementedError

    def forget(self, table: Table, v: int) -> Table:
        raise NotImplementedError

    def join(self, left: Table, right: Table, bag: int) -> Table:
        raise NotImplementedError

    def cap_ok(self, state: Hashable, slots: tuple[int, ...]) -> bool:
        raise NotImplementedError

    def in_solution(self, v: int, state: Hashable) -> bool:
        raise NotImplementedError

    final_state: Hashable = None


def slot_of(v: int, slots: tuple[int, ...]) -> int:
    for s in slots:
        if (s >> v) & 1:
            return s
    return 0


def keep_min(out: Table, state, cost: int, back) -> None:
    old = out.get(state)
    if old is None or cost < old[0]:
        out[state] = (cost, back)


@dataclass
class DpResult:
    cost: int
    solution: frozenset[int]
    max_table: int
    total_states: int


def run_dp(problem: DpProblem, nd: NiceDecomposition, *, check_caps: bool = False) -> DpResult:
    nodes = nd.nodes
    tables: list[Table] = []
    max_table = total = 0
    for t, node in enumerate(nodes):
        kind = node.kind
        slots = nd.slot_masks(t)
        kids = node.children
        if kind == LEAF:
            table = problem.leaf()
        elif kind == INTRODUCE:
            c = kids[0]
            table = problem.introduce(tables[c], node.vertex, nd.bag_mask(c), slots)
        elif kind == INTRODUCE_EDGE:
            table = problem.introduce_edge(tables[kids[0]], *node.edge)
        elif kind == FORGET:
            table = problem.forget(tables[kids[0]], node.vertex)
        elif kind == JOIN:
            table = problem.join(tables[kids[0]], tables[kids[1]], nd.bag_mask(t))
        else:
            raise ValueError(f"unknown node kind {kind!r}")
        # bags inherit partitions from different original bags; re-apply the caps when they change
        if kind != LEAF and any(nd.slot_masks(c) != slots for c in kids):
            table = {s: v for s, v in table.items() if problem.cap_ok(s, slots)}
        if check_caps:
            assert all(problem.cap_ok(s, slots) for s in table), f"cap violated at node {t}"
        tables.append(table)
        max_table = max(max_table, len(table))
        total += len(table)

    root = tables[nd.root]
    if problem.final_state not in root:
        raise AssertionError("no feasible state at the root")
    cost = root[problem.final_state][0]
    chosen = _recover(problem, nd, tables)
    return DpResult(cost, chosen, max_table, total)


def _recover(problem: DpProblem, nd: NiceDecomposition, tables: list[Table]) -> frozenset[int]:
    out = set()
    stack = [(nd.root, problem.final_state)]
    while stack:
        t, state = stack.pop()
        node = nd.nodes[t]
        back = tables[t][state][1]
        if node.kind == LEAF:
            continue
        if node.kind == JOIN:
            stack.append((node.children[0], back[0]))
            stack.append((node.children[1], back[1]))
            continue
        if node.kind == FORGET and problem.in_solution(node.vertex, back):
            out.add(node.vertex)
        stack.append((node.children[0], back))
    return frozenset(out)
