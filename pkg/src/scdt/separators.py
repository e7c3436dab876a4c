"""Vertex separators: min cuts, balanced separations, multiway cuts."""

from __future__ import annotations

from collections import deque
from collections.abc import Hashable, Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction

from .chordal import enumerate_maximal_clique_masks
from .errors import InputError, LimitExceeded, NoCvdConclusion, NoSolution, PreconditionViolated
from .graph import Graph, component_masks, iter_bits, mask_of, reachable_mask

_INF = 1 << 30


@dataclass(frozen=True)
class Separation:
    A: frozenset[int]
    B: frozenset[int]

    @property
    def separator(self) -> frozenset[int]:
        return self.A & self.B

    def is_valid(self, g: Graph) -> bool:
        if self.A | self.B != frozenset(range(g.n)):
            return False
        only_a = mask_of(self.A - self.B)
        only_b = mask_of(self.B - self.A)
        return all(g.masks[v] & only_b == 0 for v in iter_bits(only_a))


@dataclass(frozen=True)
class SemiCliqueSeparator:
    """``X = D + Z`` with ``D`` a clique and ``|Z| <= k``."""

    D: frozenset[int]
    Z: frozenset[int]

    @property
    def X(self) -> frozenset[int]:
        return self.D | self.Z

    def is_valid(self, g: Graph, k: int) -> bool:
        return g.is_clique(self.D) and not (self.D & self.Z) and len(self.Z) <= k


@dataclass(frozen=True)
class NaNbSplit:
    N_A: frozenset[int]
    N_B: frozenset[int]
    sep: SemiCliqueSeparator


def separates(g: Graph, x: Iterable[int], a: Iterable[int], b: Iterable[int]) -> bool:
    """True iff every path from ``a`` to ``b`` in ``g`` meets ``x``."""
    xm = mask_of(x)
    am = mask_of(a) & ~xm
    bm = mask_of(b) & ~xm
    return reachable_mask(g, am, g.full_mask & ~xm) & bm == 0


class VertexCutNetwork:
    """Split-vertex flow network for unit-capacity vertex cuts.

    Vertex ``v`` becomes ``in = 2v`` and ``out = 2v + 1`` joined by an arc of
    capacity one; every edge becomes two infinite arcs ``out -> in``.  Per
    query, vertices can be removed (capacity 0) or made undeletable (infinite
    capacity), and the terminal vertices themselves stay deletable unless
    fixed.
    """

    def __init__(self, g: Graph):
        self.g = g
        nodes = 2 * g.n
        self.head: list[int] = []
        self.base: list[int] = []
        self.arcs_out: list[list[int]] = [[] for _ in range(nodes)]
        for v in range(g.n):
            self._arc(2 * v, 2 * v + 1, 1)
        for u, v in g.edges():
            self._arc(2 * u + 1, 2 * v, _INF)
            self._arc(2 * v + 1, 2 * u, _INF)

    def _arc(self, a: int, b: int, c: int) -> None:
        i = len(self.head)
        self.head += [b, a]
        self.base += [c, 0]
        self.arcs_out[a].append(i)
        self.arcs_out[b].append(i + 1)

    def min_cut(self, a_mask: int, b_mask: int, limit: int,
                removed: int = 0, fixed: int = 0) -> int | None:
        """Minimum vertex cut mask between ``a_mask`` and ``b_mask``, or ``None`` if > ``limit``."""
        a_mask &= ~removed
        b_mask &= ~removed
        if not a_mask or not b_mask:
            return 0
        cap = self.base[:]
        for v in iter_bits(removed):
            cap[2 * v] = 0
        for v in iter_bits(fixed & ~removed):
            cap[2 * v] = _INF
        head, arcs_out = self.head, self.arcs_out
        sources = [2 * v for v in iter_bits(a_mask)]
        flow = 0
        nodes = len(arcs_out)
        while True:
            via = [-2] * nodes
            for s in sources:
                via[s] = -1
            queue = deque(sources)
            hit = -1
            while queue and hit < 0:
                x = queue.popleft()
                for e in arcs_out[x]:
                    if cap[e] > 0:
                        y = head[e]
                        if via[y] == -2:
                            via[y] = e
                            if y & 1 and (b_mask >> (y >> 1)) & 1:
                                hit = y
                                break
                            queue.append(y)
            if hit < 0:
                break
            flow += 1
            if flow > limit:
                return None
            y = hit
            while via[y] >= 0:
                e = via[y]
                cap[e] -= 1
                cap[e ^ 1] += 1
                y = head[e ^ 1]
        cut = 0
        for v in range(self.g.n):
            if via[2 * v] != -2 and via[2 * v + 1] == -2:
                cut |= 1 << v
        return cut & ~removed


def min_vertex_cut(g: Graph, a: Iterable[int], b: Iterable[int], limit: int) -> frozenset[int]:
    """Smallest vertex set meeting every ``A``-``B`` path (terminals may be cut).

    Raises ``LimitExceeded`` if the minimum is larger than ``limit``.
    """
    am, bm = mask_of(a), mask_of(b)
    g.check_range(iter_bits(am | bm))
    if am & bm:
        raise InputError("A and B must be disjoint")
    cut = VertexCutNetwork(g).min_cut(am, bm, limit)
    if cut is None:
        raise LimitExceeded(limit)
    return frozenset(iter_bits(cut))


def balanced_separation_from_separator(
    g: Graph, x: Iterable[int], w: Mapping[int, Fraction | int]
) -> Separation:
    """Group the components of ``G - X`` into a 2/3-balanced separation.

    Components are sorted by weight (heaviest first); the ``A`` side takes the
    shortest prefix reaching a third of the total weight, ``B`` the rest.
    Every component must weigh at most half the total.
    """
    xs = frozenset(x)
    g.check_range(xs)
    weight = {v: Fraction(w.get(v, 0)) for v in range(g.n)}
    if any(val < 0 for val in weight.values()):
        raise InputError("weights must be non-negative")
    total = sum(weight.values(), Fraction(0))
    comps = [frozenset(iter_bits(c)) for c in component_masks(g, g.full_mask & ~mask_of(xs))]
    cw = [sum((weight[v] for v in c), Fraction(0)) for c in comps]
    for c, val in zip(comps, cw):
        if val > total / 2:
            raise PreconditionViolated(f"component {sorted(c)} weighs {val} > half of {total}")
    order = sorted(range(len(comps)), key=lambda i: (-cw[i], min(comps[i])))
    if total == 0:
        cut = len(order)
    else:
        acc = Fraction(0)
        cut = len(order)
        for pos, i in enumerate(order):
            acc += cw[i]
            if acc >= total / 3:
                cut = pos + 1
                break
    a_side = frozenset().union(*(comps[i] for i in order[:cut]))
    b_side = frozenset().union(*(comps[i] for i in order[cut:]))
    return Separation(a_side | xs, b_side | xs)


def _split_for_clique(net: VertexCutNetwork, n_sorted: list[int], d: int, k: int,
                      cap: int) -> tuple[int, int, int] | None:
    terms = [v for v in n_sorted if not (d >> v) & 1]
    free = [v for v in n_sorted if (d >> v) & 1]
    if len(terms) > 2 * cap:
        return None
    found: list[tuple[int, int, int]] = []

    alive = net.g.full_mask & ~d

    def grow(side: int, other: int, bit: int, cut: int) -> int | None:
        # if the current cut already keeps the new terminal away, it stays minimum
        if bit & cut or not reachable_mask(net.g, other & ~cut, alive & ~cut) & bit:
            return cut
        return net.min_cut(side | bit, other, k, removed=d)

    # sides only grow along a branch, so the cut only grows: prune once it exceeds k
    def dfs(i: int, am: int, bm: int, na: int, nb: int, cut: int) -> bool:
        if i == len(terms):
            found.append((am, bm, cut))
            return True
        bit = 1 << terms[i]
        if na < cap:
            c = grow(am, bm, bit, cut)
            if c is not None and dfs(i + 1, am | bit, bm, na + 1, nb, c):
                return True
        if nb < cap and i > 0:
            c = grow(bm, am, bit, cut)
            if c is not None and dfs(i + 1, am, bm | bit, na, nb + 1, c):
                return True
        return False

    if not dfs(0, 0, 0, 0, 0, 0):
        return None
    am, bm, cut = found[0]
    na = am.bit_count()
    for v in free:
        if na < cap:
            am |= 1 << v
            na += 1
        else:
            bm |= 1 << v
    return am, bm, cut


def find_balanced_split(g: Graph, n_set: Iterable[int], k: int) -> NaNbSplit:
    """Split ``N`` into halves of size <= 4k+2 with a (1, k)-semi-clique separator.

    Tries every maximal clique ``D`` (in enumeration order); for each one runs
    a pruned search over 2-partitions of ``N - D`` for a min cut of size <= k in
    ``G - D``.  Raises ``NoCvdConclusion`` when nothing works, which certifies
    that ``g`` has no CVD of size ``k``.
    """
    ns = sorted(set(n_set))
    g.check_range(ns)
    if not (5 * k + 3 <= len(ns) <= 6 * k + 4):
        raise InputError(f"|N|={len(ns)} outside [{5 * k + 3}, {6 * k + 4}]")
    cap = 4 * k + 2
    net = VertexCutNetwork(g)
    for d in enumerate_maximal_clique_masks(g, k):
        res = _split_for_clique(net, ns, d, k, cap)
        if res is not None:
            am, bm, cut = res
            sep = SemiCliqueSeparator(frozenset(iter_bits(d)), frozenset(iter_bits(cut)))
            return NaNbSplit(frozenset(iter_bits(am)), frozenset(iter_bits(bm)), sep)
    raise NoCvdConclusion(k, "no balanced (1,k)-semi-clique separator of N")


def _terminal_path(g: Graph, terminals: list[int], removed: int) -> list[int] | None:
    """Internal vertices of a short path joining two different terminals in ``G - removed``."""
    owner = {t: t for t in terminals}
    prev: dict[int, int | None] = {t: None for t in terminals}
    queue = deque(terminals)
    alive = g.full_mask & ~removed
    while queue:
        a = queue.popleft()
        for b in iter_bits(g.masks[a] & alive):
            if b not in owner:
                owner[b] = owner[a]
                prev[b] = a
                queue.append(b)
            elif owner[b] != owner[a]:
                left, right = [], []
                x: int | None = a
                while x is not None:
                    left.append(x)
                    x = prev[x]
                x = b
                while x is not None:
                    right.append(x)
                    x = prev[x]
                path = left[::-1] + right
                return path[1:-1]
    return None


def _mwc_branch(g: Graph, net: VertexCutNetwork, terminals: list[int], tmask: int,
                removed: int, fixed: int, budget: int) -> int | None:
    inner = _terminal_path(g, terminals, removed)
    if inner is None:
        return removed
    if budget == 0:
        return None
    for t in terminals:
        if net.min_cut(1 << t, tmask & ~(1 << t), budget, removed=removed, fixed=fixed | tmask) is None:
            return None
    # branch on the first path vertex taken into the cut; earlier ones are kept
    for v in inner:
        if (fixed >> v) & 1:
            continue
        res = _mwc_branch(g, net, terminals, tmask, removed | (1 << v), fixed, budget - 1)
        if res is not None:
            return res
        fixed |= 1 << v
    return None


def _as_vertex(t) -> int:
    if isinstance(t, int):
        return t
    items = list(t)
    if len(items) != 1:
        raise InputError(f"terminal {t!r} is not a single vertex")
    return items[0]


def node_multiway_cut(g: Graph, terminals: Iterable[int | Iterable[int]], k: int) -> frozenset[int]:
    """Minimum ``X`` (avoiding the terminals) cutting all terminal-terminal paths.

    Iterative deepening over the size bound, branching on the vertices of a
    short terminal-terminal path, with isolating-cut lower bounds for pruning.
    Raises ``NoSolution`` if no such set of size at most ``k`` exists.
    """
    ts = [_as_vertex(t) for t in terminals]
    g.check_range(ts)
    if len(set(ts)) != len(ts):
        raise InputError("terminals must be pairwise distinct")
    tmask = mask_of(ts)
    for t in ts:
        if g.masks[t] & tmask:
            raise NoSolution(f"terminal {t} is adjacent to another terminal")
    net = VertexCutNetwork(g)
    for b in range(k + 1):
        res = _mwc_branch(g, net, ts, tmask, 0, 0, b)
        if res is not None:
            return frozenset(iter_bits(res))
    raise NoSolution(f"no node multiway cut of size <= {k}")


def three_clique_separator(g: Graph, cx: Iterable[int], cy: Iterable[int], cz: Iterable[int],
                           k: int) -> SemiCliqueSeparator:
    """A (1, k)-semi-clique ``D + Z`` pairwise separating three disjoint cliques.

    For each maximal clique ``D`` (enumeration order) attach fresh terminals to
    ``Ci - D`` in ``G - D`` and look for a node multiway cut of size <= k.
    """
    cl = [frozenset(c) for c in (cx, cy, cz)]
    for c in cl:
        g.check_range(c)
        if not g.is_clique(c):
            raise InputError(f"{sorted(c)} is not a clique")
    if cl[0] & cl[1] or cl[0] & cl[2] or cl[1] & cl[2]:
        raise InputError("cliques must be pairwise disjoint")
    cmasks = [mask_of(c) for c in cl]
    n = g.n
    terms = [n, n + 1, n + 2]
    for d in enumerate_maximal_clique_masks(g, k):
        keep = g.full_mask & ~d
        masks = [g.masks[v] & keep if (keep >> v) & 1 else 0 for v in range(n)]
        masks += [0, 0, 0]
        for i, cm in enumerate(cmasks):
            attach = cm & keep
            masks[n + i] = attach
            for v in iter_bits(attach):
                masks[v] |= 1 << (n + i)
        h = Graph.from_masks(masks)
        try:
            z = node_multiway_cut(h, terms, k)
        except NoSolution:
            continue
        return SemiCliqueSeparator(frozenset(iter_bits(d)), z)
    raise NoCvdConclusion(k, "no (1,k)-semi-clique separating the three cliques")


def tree_triple_split(tree: Mapping[Hashable, Iterable[Hashable]], x, y, z):
    """Median of ``x, y, z`` in a tree: every component of ``T - v`` holds at most one of them."""
    prev = {x: None}
    queue = deque([x])
    while queue:
        a = queue.popleft()
        for b in sorted(tree[a]):
            if b not in prev:
                prev[b] = a
                queue.append(b)

    def path_from_x(t):
        out = []
        while t is not None:
            out.append(t)
            t = prev[t]
        return out[::-1]

    py, pz = path_from_x(y), path_from_x(z)
    median = x
    for a, b in zip(py, pz):
        if a != b:
            break
        median = a
    return median
