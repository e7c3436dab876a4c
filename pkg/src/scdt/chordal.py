"""Chordality, clique trees and budgeted maximal-clique enumeration."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass

from .errors import BudgetExceeded, InputError, NonChordalInput
from .graph import Graph, induced_subgraph, iter_bits, mask_of
from .td import SemiCliqueBag, SemiCliqueTreeDecomposition


@dataclass(frozen=True)
class EliminationOrder:
    order: tuple[int, ...]
    perfect: bool = False

    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}

    def is_perfect_for(self, g: Graph) -> bool:
        """Directly check that every vertex's later neighbors form a clique."""
        pos = self.position()
        if sorted(self.order) != list(range(g.n)):
            return False
        for v in self.order:
            later = [u for u in g.adj[v] if pos[u] > pos[v]]
            if not g.is_clique(later):
                return False
        return True


@dataclass(frozen=True)
class CliqueBudget:
    """Maximal-clique allowance ``2^k * n`` for a graph with a CVD of size ``k``."""

    k: int
    n: int

    def __post_init__(self):
        if self.k < 0 or self.n < 0:
            raise InputError("clique budget needs k >= 0 and n >= 0")

    @property
    def limit(self) -> int:
        return (1 << self.k) * self.n


def mcs_order(g: Graph) -> list[int]:
    """Maximum cardinality search; returns the visit order (ties: smallest id).

    The *reverse* of the visit order is a perfect elimination order iff ``g`` is
    chordal.
    """
    weight = [0] * g.n
    unvisited = set(range(g.n))
    order = []
    for _ in range(g.n):
        v = min(unvisited, key=lambda x: (-weight[x], x))
        unvisited.discard(v)
        order.append(v)
        for u in g.adj[v]:
            if u in unvisited:
                weight[u] += 1
    return order


def _peo_violation(g: Graph, peo: list[int]) -> tuple[int, int, int] | None:
    """First ``(v, x, y)`` with ``x, y`` later non-adjacent neighbors of ``v``."""
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = sorted((u for u in g.adj[v] if pos[u] > pos[v]), key=pos.__getitem__)
        if not later:
            continue
        p = later[0]
        for w in later[1:]:
            if not g.has_edge(p, w):
                return v, p, w
    return None


def _chordless_cycle_through(g: Graph, v: int, x: int, y: int) -> list[int] | None:
    # shortest x-y path avoiding N[v] except x, y; closing through v gives an induced cycle
    banned = g.masks[v] | (1 << v)
    allowed = g.full_mask & ~banned | (1 << x) | (1 << y)
    prev = {x: None}
    queue = deque([x])
    while queue:
        a = queue.popleft()
        if a == y:
            break
        for b in iter_bits(g.masks[a] & allowed):
            if b not in prev:
                prev[b] = a
                queue.append(b)
    if y not in prev:
        return None
    path = []
    a = y
    while a is not None:
        path.append(a)
        a = prev[a]
    path.reverse()
    return [v, *path]


def find_chordless_cycle(g: Graph, hint: tuple[int, int, int] | None = None) -> list[int] | None:
    """Return an induced cycle of length >= 4, or ``None`` if ``g`` is chordal."""
    if hint is not None:
        cyc = _chordless_cycle_through(g, *hint)
        if cyc is not None:
            return cyc
    for v in range(g.n):
        nb = sorted(g.adj[v])
        for i, x in enumerate(nb):
            for y in nb[i + 1:]:
                if not g.has_edge(x, y):
                    cyc = _chordless_cycle_through(g, v, x, y)
                    if cyc is not None:
                        return cyc
    return None


def is_chordal(g: Graph) -> tuple[bool, EliminationOrder | list[int]]:
    """Chordality test with a certificate either way.

    Returns ``(True, perfect elimination order)`` or ``(False, cycle)`` where
    ``cycle`` lists the vertices of an induced cycle of length at least 4.
    """
    peo = mcs_order(g)[::-1]
    bad = _peo_violation(g, peo)
    if bad is None:
        return True, EliminationOrder(tuple(peo), perfect=True)
    cycle = find_chordless_cycle(g, bad)
    assert cycle is not None and len(cycle) >= 4
    return False, cycle


def _require_chordal(g: Graph, what: str = "graph") -> EliminationOrder:
    ok, cert = is_chordal(g)
    if not ok:
        raise NonChordalInput(f"{what} is not chordal (induced cycle {cert})", cycle=cert)
    return cert


def chordal_maximal_cliques(g: Graph, peo: EliminationOrder | None = None) -> list[frozenset[int]]:
    """Maximal cliques of a chordal graph, one candidate per vertex of the order."""
    if peo is None:
        peo = _require_chordal(g)
    pos = peo.position()
    cands = []
    for v in peo.order:
        cands.append(mask_of([v, *(u for u in g.adj[v] if pos[u] > pos[v])]))
    # a candidate is maximal iff no other candidate strictly contains it
    uniq = sorted(set(cands), key=lambda m: (-m.bit_count(), m))
    maximal: list[int] = []
    for c in uniq:
        if not any(c & big == c for big in maximal):
            maximal.append(c)
    maximal.sort(key=lambda m: sorted(iter_bits(m)))
    return [frozenset(iter_bits(c)) for c in maximal]


def _clique_tree_parts(g: Graph) -> tuple[list[frozenset[int]], list[int | None]]:
    peo = _require_chordal(g)
    cliques = chordal_maximal_cliques(g, peo)
    if not cliques:
        return [frozenset()], [None]
    # maximum-weight spanning tree on intersection sizes (Kruskal); weight 0 joins components
    idx = range(len(cliques))
    pairs = sorted(((len(cliques[i] & cliques[j]), i, j) for i in idx for j in idx if i < j),
                   key=lambda t: (-t[0], t[1], t[2]))
    uf = list(idx)

    def find(a):
        while uf[a] != a:
            uf[a] = uf[uf[a]]
            a = uf[a]
        return a

    nbrs: list[list[int]] = [[] for _ in idx]
    for _, i, j in pairs:
        ri, rj = find(i), find(j)
        if ri != rj:
            uf[ri] = rj
            nbrs[i].append(j)
            nbrs[j].append(i)
    parent: list[int | None] = [None] * len(cliques)
    seen = {0}
    queue = deque([0])
    while queue:
        a = queue.popleft()
        for b in sorted(nbrs[a]):
            if b not in seen:
                seen.add(b)
                parent[b] = a
                queue.append(b)
    return cliques, parent


def clique_tree(g: Graph) -> SemiCliqueTreeDecomposition:
    """Clique tree of a chordal graph: one bag per maximal clique, rooted at bag 0."""
    cliques, parent = _clique_tree_parts(g)
    bags = [SemiCliqueBag((c,)) for c in cliques]
    return SemiCliqueTreeDecomposition(bags, parent, k=0, budget=(1, 0))


def modulator_semi_clique_td(g: Graph, modulator: Iterable[int]) -> SemiCliqueTreeDecomposition:
    """(1, |S|)-semi-clique decomposition from a known modulator ``S``.

    Clique tree of ``G - S`` with ``S`` added to every bag as the ``N`` part.
    """
    s = frozenset(modulator)
    g.check_range(s)
    rest = [v for v in range(g.n) if v not in s]
    sub, back = induced_subgraph(g, rest)
    _require_chordal(sub, "G - S")
    if not rest:
        bags = [SemiCliqueBag((), s)]
        parent: list[int | None] = [None]
    else:
        cliques, parent = _clique_tree_parts(sub)
        bags = [SemiCliqueBag((frozenset(back[v] for v in c),), s) for c in cliques]
    return SemiCliqueTreeDecomposition(bags, parent, k=len(s), budget=(1, len(s)))


def iter_maximal_cliques(g: Graph, within: int | None = None):
    """Bron-Kerbosch with Tomita pivoting over bitmasks; yields clique masks.

    Deterministic: pivot is the vertex with most candidate neighbors (smallest
    id on ties) and branches go in increasing vertex order.
    """
    masks = g.masks
    p0 = g.full_mask if within is None else within
    if not p0:
        return
    stack = [(0, p0, 0)]
    while stack:
        r, p, x = stack.pop()
        if not p:
            if not x:
                yield r
            continue
        best, pivot = -1, -1
        for u in iter_bits(p | x):
            c = (p & masks[u]).bit_count()
            if c > best:
                best, pivot = c, u
        branch = p & ~masks[pivot]
        children = []
        for v in iter_bits(branch):
            bit = 1 << v
            children.append((r | bit, p & masks[v], x & masks[v]))
            p &= ~bit
            x |= bit
        stack.extend(reversed(children))


def enumerate_maximal_cliques(g: Graph, budget: CliqueBudget | int) -> list[frozenset[int]]:
    """All maximal cliques of ``g``, aborting once there are more than ``2^k * n``.

    ``budget`` may be a ``CliqueBudget`` or just ``k`` (with ``n = g.n``).
    Raises ``BudgetExceeded`` -- a certificate that ``g`` has no CVD of size
    ``k`` -- as soon as the count passes the limit.
    """
    if isinstance(budget, int):
        budget = CliqueBudget(budget, g.n)
    limit = budget.limit
    out = []
    for c in iter_maximal_cliques(g):
        out.append(c)
        if len(out) > limit:
            raise BudgetExceeded(budget.k, limit)
    return [frozenset(iter_bits(c)) for c in out]


def enumerate_maximal_clique_masks(g: Graph, k: int) -> list[int]:
    limit = CliqueBudget(k, g.n).limit
    out = []
    for c in iter_maximal_cliques(g):
        out.append(c)
        if len(out) > limit:
            raise BudgetExceeded(k, limit)
    return out


def chordal_max_independent_set(g: Graph, within: int | None = None) -> int:
    """Maximum independent set of a chordal ``G[within]`` (greedy along a PEO)."""
    wm = g.full_mask if within is None else within
    sub, back = induced_subgraph(g, iter_bits(wm))
    peo = _require_chordal(sub)
    chosen = 0
    blocked = 0
    for v in peo.order:
        if not (blocked >> v) & 1:
            chosen |= 1 << v
            blocked |= sub.masks[v] | (1 << v)
    return mask_of(back[v] for v in iter_bits(chosen))


__all__ = [
    "CliqueBudget",
    "EliminationOrder",
    "chordal_max_independent_set",
    "chordal_maximal_cliques",
    "clique_tree",
    "enumerate_maximal_cliques",
    "find_chordless_cycle",
    "is_chordal",
    "iter_maximal_cliques",
    "mcs_order",
    "modulator_semi_clique_td",
]
