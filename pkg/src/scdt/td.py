"""Semi-clique tree decompositions: the data model and its validator."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .graph import Graph, iter_bits, mask_of

NUM_SLOTS = 4


@dataclass(frozen=True)
class SemiCliqueBag:
    """A bag split into up to four clique slots plus a remainder ``N``.

    ``cliques`` always has exactly four entries; unused slots are empty.
    """

    cliques: tuple[frozenset[int], ...]
    rest: frozenset[int] = frozenset()

    def __post_init__(self):
        cl = tuple(frozenset(c) for c in self.cliques)
        if len(cl) > NUM_SLOTS:
            raise ValueError(f"at most {NUM_SLOTS} clique slots allowed, got {len(cl)}")
        cl = cl + (frozenset(),) * (NUM_SLOTS - len(cl))
        object.__setattr__(self, "cliques", cl)
        object.__setattr__(self, "rest", frozenset(self.rest))

    @classmethod
    def build(cls, cliques: Iterable[Iterable[int]] = (), rest: Iterable[int] = ()) -> SemiCliqueBag:
        return cls(tuple(frozenset(c) for c in cliques), frozenset(rest))

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset().union(self.rest, *self.cliques)

    @property
    def mask(self) -> int:
        return mask_of(self.vertices)

    def nonempty_cliques(self) -> list[frozenset[int]]:
        return [c for c in self.cliques if c]

    def slot_of(self, v: int) -> int | None:
        """Index of the clique slot holding ``v``, or ``None`` if ``v`` is in ``N``."""
        for i, c in enumerate(self.cliques):
            if v in c:
                return i
        return None

    def restrict(self, keep: Iterable[int]) -> SemiCliqueBag:
        keep = frozenset(keep)
        return SemiCliqueBag(tuple(c & keep for c in self.cliques), self.rest & keep)

    def with_extra(self, extra: Iterable[int]) -> SemiCliqueBag:
        """Same partition with ``extra`` vertices appended to ``N``."""
        return SemiCliqueBag(self.cliques, self.rest | frozenset(extra))

    def is_disjoint_partition(self) -> bool:
        parts = [*self.cliques, self.rest]
        return sum(len(p) for p in parts) == len(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass
class SemiCliqueTreeDecomposition:
    """Rooted tree of ``SemiCliqueBag`` nodes.

    Nodes are list indices; ``parent[root] is None``.  ``budget`` is the
    declared ``(c, l)`` pair every bag must satisfy.
    """

    bags: list[SemiCliqueBag]
    parent: list[int | None]
    k: int
    budget: tuple[int, int]

    @property
    def root(self) -> int:
        roots = [i for i, p in enumerate(self.parent) if p is None]
        if len(roots) != 1:
            raise ValueError(f"expected exactly one root, found {len(roots)}")
        return roots[0]

    def children(self) -> list[list[int]]:
        ch: list[list[int]] = [[] for _ in self.bags]
        for i, p in enumerate(self.parent):
            if p is not None:
                ch[p].append(i)
        return ch

    def __len__(self) -> int:
        return len(self.bags)

    def max_rest(self) -> int:
        return max((len(b.rest) for b in self.bags), default=0)

    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str
    node: int | None = None

    def __str__(self) -> str:
        where = f" at node {self.node}" if self.node is not None else ""
        return f"{self.kind}{where}: {self.detail}"


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    def add(self, kind: str, detail: str, node: int | None = None) -> None:
        self.violations.append(Violation(kind, detail, node))

    @property
    def ok(self) -> bool:
        return not self.violations

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}

    def __bool__(self) -> bool:
        return self.ok

    def __iter__(self):
        return iter(self.violations)

    def __len__(self) -> int:
        return len(self.violations)


def check_tree_shape(parent: Sequence[int | None]) -> list[str]:
    """Problems with the parent array: root count, range, cycles."""
    problems = []
    n = len(parent)
    if n == 0:
        return ["decomposition has no nodes"]
    roots = [i for i, p in enumerate(parent) if p is None]
    if len(roots) != 1:
        problems.append(f"expected one root, found {len(roots)}")
    for i, p in enumerate(parent):
        if p is not None and not (0 <= p < n) or p == i:
            problems.append(f"node {i} has invalid parent {p}")
    if problems:
        return problems
    for i in range(n):
        seen = set()
        j = i
        while j is not None:
            if j in seen:
                return [f"parent pointers from node {i} form a cycle"]
            seen.add(j)
            j = parent[j]
    return problems


def check_bag_structure(bag: SemiCliqueBag, budget: tuple[int, int]) -> list[tuple[str, str]]:
    """Graph-free checks: disjoint slots and the ``(c, l)`` budget."""
    out = []
    c, ell = budget
    if not bag.is_disjoint_partition():
        out.append(("partition", "clique slots and N are not pairwise disjoint"))
    used = len(bag.nonempty_cliques())
    if used > c:
        out.append(("budget", f"{used} nonempty cliques exceeds c={c}"))
    if len(bag.rest) > ell:
        out.append(("budget", f"|N|={len(bag.rest)} exceeds l={ell}"))
    return out


def validate_td(g: Graph, td: SemiCliqueTreeDecomposition,
                budget: tuple[int, int] | None = None) -> ValidationReport:
    """Check the three tree-decomposition axioms plus every bag's partition.

    Returns a report; an empty report means the decomposition is valid.
    ``budget`` defaults to the one declared on ``td``.
    """
    report = ValidationReport()
    budget = td.budget if budget is None else budget
    if len(td.bags) != len(td.parent):
        report.add("tree", "bags and parent arrays differ in length")
        return report
    for msg in check_tree_shape(td.parent):
        report.add("tree", msg)
    if not report.ok:
        return report

    bag_masks = []
    for t, bag in enumerate(td.bags):
        for v in bag.vertices:
            if not (0 <= v < g.n):
                report.add("range", f"vertex {v} not in graph", t)
        for kind, detail in check_bag_structure(bag, budget):
            report.add(kind, detail, t)
        for i, clique in enumerate(bag.cliques):
            inside = [v for v in clique if 0 <= v < g.n]
            if not g.is_clique(inside):
                report.add("clique", f"slot C{i + 1}={sorted(clique)} is not a clique", t)
        bag_masks.append(mask_of(v for v in bag.vertices if 0 <= v < g.n))

    covered = 0
    for bm in bag_masks:
        covered |= bm
    missing = g.full_mask & ~covered
    if missing:
        report.add("coverage", f"vertices {list(iter_bits(missing))} are in no bag")

    for u, v in g.edges():
        pair = (1 << u) | (1 << v)
        if not any(bm & pair == pair for bm in bag_masks):
            report.add("edge", f"edge ({u}, {v}) is in no bag")

    # a vertex's nodes are connected iff exactly one of them has its parent outside the set
    tops = [0] * g.n
    for t, bm in enumerate(bag_masks):
        p = td.parent[t]
        above = bag_masks[p] if p is not None else 0
        for v in iter_bits(bm & ~above):
            tops[v] += 1
    for v in range(g.n):
        if tops[v] > 1:
            report.add("connectivity", f"nodes containing vertex {v} are not connected")
    return report
