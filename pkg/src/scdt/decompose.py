"""Robust construction of (4, 7k+5)-semi-clique tree decompositions.

``decompose`` either returns a decomposition whose every bag carries an
explicit partition into at most four cliques plus at most ``7k + 5`` other
vertices, or raises ``NoCvdConclusion`` proving that no chordal vertex
deletion set of size ``k`` exists.  Success does *not* certify the promise.

The recursion works on frames ``(W, S)`` where ``S`` is the boundary of
``G[W]``.  Each step grows the boundary into a root bag ``S_hat`` and recurses
into the components of ``G[W - S_hat]``.
"""

from __future__ import annotations

import sys
from collections.abc import Iterable
from dataclasses import dataclass, field

from .errors import InputError
from .graph import Graph, component_masks, induced_subgraph, iter_bits, mask_of, neighborhood_mask
from .separators import find_balanced_split, three_clique_separator
from .td import SemiCliqueBag, SemiCliqueTreeDecomposition


def budget_for(k: int) -> tuple[int, int]:
    return 4, 7 * k + 5


@dataclass(frozen=True)
class DecomposeFrame:
    """Arguments of one recursive call: ``G[W]`` with boundary ``S = C + N``."""

    W: frozenset[int]
    S: frozenset[int]
    d: int
    cliques: tuple[frozenset[int], ...] = ()
    rest: frozenset[int] = frozenset()

    def problems(self, g: Graph, k: int, n_limit: int | None = None) -> list[str]:
        """Frame invariants that do not hold (empty list when the frame is sound)."""
        out = []
        if not self.S < self.W:
            out.append("S is not a proper subset of W")
        if frozenset().union(self.rest, *self.cliques) != self.S:
            out.append("partition does not cover S exactly")
        parts = [*self.cliques, self.rest]
        if sum(len(p) for p in parts) != len(self.S):
            out.append("partition parts overlap")
        if len(self.cliques) > self.d:
            out.append(f"{len(self.cliques)} clique slots for d={self.d}")
        for c in self.cliques:
            if not g.is_clique(c):
                out.append(f"slot {sorted(c)} is not a clique")
        limit = 6 * k + 4 if n_limit is None else n_limit
        if len(self.rest) > limit:
            out.append(f"|N|={len(self.rest)} exceeds {limit}")
        inner = mask_of(self.W - self.S)
        if neighborhood_mask(g, inner) != mask_of(self.S):
            out.append("S is not the neighborhood of W - S")
        return out


@dataclass
class TraceEvent:
    proc: str  # "decompose" or "split"
    case: int  # 0 = base case, 1 / 2 = the two ways of growing the boundary
    d: int
    free: int  # |W - S|
    n_rest: int  # |N| of the boundary partition


@dataclass
class _Builder:
    g: Graph
    k: int
    check: bool = True
    bags: list[SemiCliqueBag] = field(default_factory=list)
    parent: list[int | None] = field(default_factory=list)
    trace: list[TraceEvent] = field(default_factory=list)

    def node(self, slots: list[int], rest: int, parent: int | None = None) -> int:
        bag = SemiCliqueBag(tuple(frozenset(iter_bits(c)) for c in slots),
                            frozenset(iter_bits(rest)))
        self.bags.append(bag)
        self.parent.append(parent)
        return len(self.bags) - 1

    def assert_frame(self, w: int, s: int, slots: list[int], rest: int, proc: str) -> None:
        if not self.check:
            return
        k = self.k
        frame = DecomposeFrame(frozenset(iter_bits(w)), frozenset(iter_bits(s)),
                               3 if proc == "split" else 2,
                               tuple(frozenset(iter_bits(c)) for c in slots),
                               frozenset(iter_bits(rest)))
        limit = 5 * k + 3 if proc == "split" else 6 * k + 4
        bad = frame.problems(self.g, k, limit)
        if proc == "split" and len([c for c in slots if c]) != 3:
            bad.append("split_cliques needs three nonempty cliques")
        assert not bad, f"{proc} frame invariant broken: {bad}"

    def recurse(self, w: int, s: int, slots: list[int], rest: int) -> int:
        g, k = self.g, self.k
        self.assert_frame(w, s, slots, rest, "decompose")
        free = w & ~s
        d = len(slots)
        if free.bit_count() <= k + 1:
            self.trace.append(TraceEvent("decompose", 0, d, free.bit_count(), rest.bit_count()))
            return self.node(slots, rest | free)
        u = free & -free
        if rest.bit_count() < 5 * k + 3:
            self.trace.append(TraceEvent("decompose", 1, d, free.bit_count(), rest.bit_count()))
            new_slots, new_rest = list(slots), rest | u
            s_hat = s | u
        else:
            self.trace.append(TraceEvent("decompose", 2, d, free.bit_count(), rest.bit_count()))
            sub, back = induced_subgraph(g, iter_bits(w))
            index = {v: i for i, v in enumerate(back)}
            split = find_balanced_split(sub, [index[v] for v in iter_bits(rest)], k)
            dm = mask_of(back[v] for v in split.sep.D)
            zm = mask_of(back[v] for v in split.sep.Z)
            c_all = 0
            for c in slots:
                c_all |= c
            d_new = dm & ~c_all
            new_slots = list(slots) + ([d_new] if d_new else [])
            new_rest = (rest | zm | u) & ~(c_all | d_new)
            s_hat = s | dm | zm | u
        root = self.node(new_slots, new_rest)
        for comp in component_masks(g, w & ~s_hat):
            bound = neighborhood_mask(g, comp)
            if self.check:
                assert (bound & new_rest).bit_count() <= 5 * k + 3, "component sees too much of N'"
            child_slots = [c & bound for c in new_slots if c & bound]
            child_rest = new_rest & bound
            if len(child_slots) == 3:
                child = self.split(comp | bound, bound, child_slots, child_rest)
            else:
                child = self.recurse(comp | bound, bound, child_slots, child_rest)
            self.parent[child] = root
        return root

    def split(self, w: int, s: int, slots: list[int], rest: int) -> int:
        g, k = self.g, self.k
        self.assert_frame(w, s, slots, rest, "split")
        free = w & ~s
        if free.bit_count() <= k + 1:
            self.trace.append(TraceEvent("split", 0, 3, free.bit_count(), rest.bit_count()))
            return self.node(slots, rest | free)
        self.trace.append(TraceEvent("split", 2, 3, free.bit_count(), rest.bit_count()))
        u = free & -free
        sub, back = induced_subgraph(g, iter_bits(w))
        index = {v: i for i, v in enumerate(back)}
        cx, cy, cz = ([index[v] for v in iter_bits(c)] for c in slots)
        sep = three_clique_separator(sub, cx, cy, cz, k)
        dm = mask_of(back[v] for v in sep.D)
        zm = mask_of(back[v] for v in sep.Z)
        c_all = slots[0] | slots[1] | slots[2]
        d_new = dm & ~c_all
        y_prime = dm | zm | u
        new_rest = (rest | zm | u) & ~(c_all | d_new)
        root = self.node([*slots, d_new], new_rest)
        for comp in component_masks(g, w & ~(s | y_prime)):
            bound = neighborhood_mask(g, comp)
            touching = [c for c in slots if c & ~y_prime & bound]
            if self.check:
                assert len(touching) <= 1, "separator failed to split the three cliques"
            own = (touching[0] & ~dm & bound) if touching else 0
            d_part = dm & bound
            child_slots = [c for c in (own, d_part) if c]
            child_rest = bound & ~(own | d_part)
            child = self.recurse(comp | bound, bound, child_slots, child_rest)
            self.parent[child] = root
        return root

    def result(self) -> SemiCliqueTreeDecomposition:
        return SemiCliqueTreeDecomposition(self.bags, self.parent, self.k, budget_for(self.k))


def _with_recursion_room(n: int):
    need = 8 * n + 200
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)


def decompose(g: Graph, k: int, *, check: bool = True,
              trace: list[TraceEvent] | None = None) -> SemiCliqueTreeDecomposition:
    """Build a (4, 7k+5)-semi-clique tree decomposition of ``g`` or raise ``NoCvdConclusion``.

    Disconnected graphs get a fresh empty root bag with one subtree per
    component.  ``check`` asserts the recursion invariants on every call;
    ``trace`` (if given) collects one ``TraceEvent`` per call.
    """
    if k < 0:
        raise InputError("k must be non-negative")
    _with_recursion_room(g.n)
    b = _Builder(g, k, check)
    if g.n == 0:
        b.node([], 0)
        return b.result()
    comps = component_masks(g, g.full_mask)
    if len(comps) == 1:
        b.recurse(comps[0], 0, [], 0)
    else:
        root = b.node([], 0)
        for comp in comps:
            r = b.recurse(comp, 0, [], 0)
            b.parent[r] = root
    if trace is not None:
        trace.extend(b.trace)
    return b.result()


def decompose_rec(g: Graph, frame: DecomposeFrame, k: int, *,
                  check: bool = True) -> SemiCliqueTreeDecomposition:
    """Run one ``Decompose(W, S, d)`` call; the result decomposes ``G[W]`` with ``S`` in the root bag.

    Node ids in the returned decomposition are fresh; vertex ids are those of ``g``.
    """
    _with_recursion_room(g.n)
    b = _Builder(g, k, check)
    slots = [mask_of(c) for c in frame.cliques if c]
    if len(slots) == 3:
        b.split(mask_of(frame.W), mask_of(frame.S), slots, mask_of(frame.rest))
    else:
        b.recurse(mask_of(frame.W), mask_of(frame.S), slots, mask_of(frame.rest))
    return b.result()


def split_cliques(g: Graph, w: Iterable[int], cliques: Iterable[Iterable[int]],
                  rest: Iterable[int], k: int, *, check: bool = True) -> SemiCliqueTreeDecomposition:
    """Run one ``SplitCliques(W, S)`` call for a boundary ``S = Cx + Cy + Cz + N``."""
    _with_recursion_room(g.n)
    b = _Builder(g, k, check)
    slots = [mask_of(c) for c in cliques]
    if len(slots) != 3:
        raise InputError("split_cliques needs exactly three clique slots")
    rm = mask_of(rest)
    s = rm
    for c in slots:
        s |= c
    b.split(mask_of(w), s, slots, rm)
    return b.result()
