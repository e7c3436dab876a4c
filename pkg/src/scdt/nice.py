"""Nice semi-clique tree decompositions, the form the dynamic programs run on."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InputError
from .graph import Graph
from .td import SemiCliqueBag, SemiCliqueTreeDecomposition, ValidationReport, check_bag_structure, validate_td

LEAF = "leaf"
INTRODUCE = "introduce"
INTRODUCE_EDGE = "introduce_edge"
FORGET = "forget"
JOIN = "join"


@dataclass(frozen=True)
class NiceNode:
    kind: str
    bag: SemiCliqueBag
    children: tuple[int, ...] = ()
    vertex: int | None = None
    edge: tuple[int, int] | None = None

    @property
    def mask(self) -> int:
        m = 0
        for v in self.bag.vertices:
            m |= 1 << v
        return m


@dataclass
class NiceDecomposition:
    """Nodes listed children-first; the last node is the root (empty bag)."""

    nodes: list[NiceNode]
    k: int
    budget: tuple[int, int]
    _masks: list[int] = field(default_factory=list, repr=False)
    _slots: list[tuple[int, ...]] = field(default_factory=list, repr=False)

    def __post_init__(self):
        self._masks = [nd.mask for nd in self.nodes]
        self._slots = [tuple(sum(1 << v for v in c) for c in nd.bag.cliques) for nd in self.nodes]

    @property
    def root(self) -> int:
        return len(self.nodes) - 1

    def bag_mask(self, t: int) -> int:
        return self._masks[t]

    def slot_masks(self, t: int) -> tuple[int, ...]:
        return self._slots[t]

    def __len__(self) -> int:
        return len(self.nodes)

    def count(self, kind: str) -> int:
        return sum(nd.kind == kind for nd in self.nodes)

    def as_tree_decomposition(self) -> SemiCliqueTreeDecomposition:
        parent: list[int | None] = [None] * len(self.nodes)
        for t, nd in enumerate(self.nodes):
            for c in nd.children:
                parent[c] = t
        return SemiCliqueTreeDecomposition([nd.bag for nd in self.nodes], parent, self.k, self.budget)


class _NiceBuilder:
    def __init__(self, g: Graph):
        self.g = g
        self.nodes: list[NiceNode] = []
        self.done_edges: set[tuple[int, int]] = set()

    def add(self, kind, bag, children=(), vertex=None, edge=None) -> int:
        self.nodes.append(NiceNode(kind, bag, tuple(children), vertex, edge))
        return len(self.nodes) - 1

    def introduce_chain(self, top: int | None, have: frozenset[int], target: SemiCliqueBag) -> int:
        if top is None:
            top = self.add(LEAF, SemiCliqueBag(()))
        for v in sorted(target.vertices - have):
            have = have | {v}
            top = self.add(INTRODUCE, target.restrict(have), [top], vertex=v)
        return top

    def forget_chain(self, top: int, have: frozenset[int], drop: frozenset[int],
                     source: SemiCliqueBag) -> tuple[int, frozenset[int]]:
        g = self.g
        for v in sorted(drop):
            # the last place v is present: introduce its still-pending edges here
            for w in sorted(have):
                e = (min(v, w), max(v, w))
                if w != v and g.has_edge(v, w) and e not in self.done_edges:
                    self.done_edges.add(e)
                    top = self.add(INTRODUCE_EDGE, source.restrict(have), [top], edge=e)
            have = have - {v}
            top = self.add(FORGET, source.restrict(have), [top], vertex=v)
        return top, have


def refine_to_nice(td: SemiCliqueTreeDecomposition, g: Graph, *, validate: bool = True) -> NiceDecomposition:
    """Turn a valid semi-clique tree decomposition into a nice one.

    Between a node and each child there is a forget chain followed by an
    introduce chain; multi-child nodes become left-deep binary joins; the
    root is forgotten down to the empty bag.  Every edge is introduced exactly
    once, right below the forget of whichever endpoint leaves first.  Bags keep
    the clique partition of the nearest original bag, restricted.
    """
    if validate:
        report = validate_td(g, td)
        if not report.ok:
            raise InputError("cannot refine an invalid decomposition: "
                             + "; ".join(str(v) for v in list(report)[:5]))
    b = _NiceBuilder(g)
    children = td.children()
    root = td.root
    # iterative post-order over the original tree
    order, stack = [], [root]
    while stack:
        t = stack.pop()
        order.append(t)
        stack.extend(children[t])
    top_of: dict[int, int] = {}
    for t in reversed(order):
        bag = td.bags[t]
        branches = []
        for c in children[t]:
            cbag = td.bags[c]
            node, have = b.forget_chain(top_of.pop(c), cbag.vertices, cbag.vertices - bag.vertices, cbag)
            branches.append(b.introduce_chain(node, have, bag))
        if not branches:
            top_of[t] = b.introduce_chain(None, frozenset(), bag)
            continue
        cur = branches[0]
        for other in branches[1:]:
            cur = b.add(JOIN, bag, [cur, other])
        top_of[t] = cur
    rbag = td.bags[root]
    top, _ = b.forget_chain(top_of[root], rbag.vertices, rbag.vertices, rbag)
    assert not b.nodes[top].bag.vertices
    return NiceDecomposition(b.nodes, td.k, td.budget)


def validate_nice(g: Graph, nd: NiceDecomposition) -> ValidationReport:
    """Shape rules of each node type, the budget, and the underlying decomposition axioms."""
    report = validate_td(g, nd.as_tree_decomposition())
    seen_edges: dict[tuple[int, int], int] = {}
    forgotten: dict[int, int] = {}
    for t, node in enumerate(nd.nodes):
        bag = node.bag.vertices
        kids = [nd.nodes[c].bag.vertices for c in node.children]
        if any(c >= t for c in node.children):
            report.add("shape", "child listed after its parent", t)
            continue
        for kind, detail in check_bag_structure(node.bag, nd.budget):
            report.add(kind, detail, t)
        if node.kind == LEAF:
            if kids or bag:
                report.add("shape", "leaf must be childless with an empty bag", t)
        elif node.kind == INTRODUCE:
            if len(kids) != 1 or node.vertex in kids[0] or bag != kids[0] | {node.vertex}:
                report.add("shape", f"bad introduce of {node.vertex}", t)
        elif node.kind == FORGET:
            if len(kids) != 1 or node.vertex not in kids[0] or bag != kids[0] - {node.vertex}:
                report.add("shape", f"bad forget of {node.vertex}", t)
            forgotten[node.vertex] = forgotten.get(node.vertex, 0) + 1
        elif node.kind == INTRODUCE_EDGE:
            u, v = node.edge
            if len(kids) != 1 or bag != kids[0] or not {u, v} <= bag or not g.has_edge(u, v):
                report.add("shape", f"bad edge introduce {node.edge}", t)
            seen_edges[(min(u, v), max(u, v))] = seen_edges.get((min(u, v), max(u, v)), 0) + 1
        elif node.kind == JOIN:
            if len(kids) != 2 or kids[0] != bag or kids[1] != bag:
                report.add("shape", "join children must share the parent's bag", t)
        else:
            report.add("shape", f"unknown node kind {node.kind!r}", t)
    if nd.nodes and nd.nodes[-1].bag.vertices:
        report.add("shape", "root bag is not empty")
    for e in g.edges():
        if seen_edges.get(e, 0) != 1:
            report.add("edge", f"edge {e} introduced {seen_edges.get(e, 0)} times")
    for v in range(g.n):
        if forgotten.get(v, 0) != 1:
            report.add("shape", f"vertex {v} forgotten {forgotten.get(v, 0)} times")
    return report


def with_apex(td: SemiCliqueTreeDecomposition, g: Graph) -> tuple[SemiCliqueTreeDecomposition, Graph]:
    """Add a universal vertex ``v0 = n`` to the graph and to every bag's ``N`` (budget grows by one)."""
    v0 = g.n
    g2 = g.add_vertex(range(g.n))
    bags = [bag.with_extra([v0]) for bag in td.bags]
    c, ell = td.budget
    return SemiCliqueTreeDecomposition(bags, list(td.parent), td.k, (c, ell + 1)), g2

