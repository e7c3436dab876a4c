"""Table transitions for vertex cover, odd cycle transversal and feedback vertex set."""

from __future__ import annotations

from ..graph import Graph
from .engine import DpProblem, Table, keep_min, slot_of


class VertexCover(DpProblem):
    """State: the cover's intersection with the bag, as a mask."""

    kind = "VC"
    final_state = 0

    def leaf(self) -> Table:
        return {0: (0, None)}

    def introduce(self, table, v, child_bag, slots):
        vb = 1 << v
        nb = self.g.masks[v] & child_bag
        others = slot_of(v, slots) & child_bag
        out = {}
        for s, (c, _) in table.items():
            out[s | vb] = (c + 1, s)
            # leaving v out needs its bag neighbours covered (and so every clique mate)
            if not (nb | others) & ~s:
                out[s] = (c, s)
        return out

    def introduce_edge(self, table, u, w):
        pair = (1 << u) | (1 << w)
        return {s: (c, s) for s, (c, _) in table.items() if s & pair}

    def forget(self, table, v):
        vb = 1 << v
        out: Table = {}
        for s, (c, _) in table.items():
            keep_min(out, s & ~vb, c, s)
        return out

    def join(self, left, right, bag):
        out = {}
        for s, (c1, _) in left.items():
            hit = right.get(s)
            if hit is not None:
                out[s] = (c1 + hit[0] - s.bit_count(), (s, s))
        return out

    def cap_ok(self, s, slots):
        return all((sl & ~s).bit_count() <= 1 for sl in slots)

    def in_solution(self, v, s):
        return bool((s >> v) & 1)


class OddCycleTransversal(DpProblem):
    """State: ``(Y1, Y2)`` side masks; bag vertices outside both are deleted."""

    kind = "OCT"
    final_state = (0, 0)

    def leaf(self) -> Table:
        return {(0, 0): (0, None)}

    def introduce(self, table, v, child_bag, slots):
        vb = 1 << v
        nb = self.g.masks[v] & child_bag
        sl = slot_of(v, slots)
        out = {}
        for st, (c, _) in table.items():
            m1, m2 = st
            out[st] = (c + 1, st)
            if ((m1 | m2) & sl).bit_count() >= 2:
                continue
            if not nb & m1:
                out[(m1 | vb, m2)] = (c, st)
            if not nb & m2:
                out[(m1, m2 | vb)] = (c, st)
        return out

    def introduce_edge(self, table, u, w):
        pair = (1 << u) | (1 << w)
        return {st: (c, st) for st, (c, _) in table.items()
                if st[0] & pair != pair and st[1] & pair != pair}

    def forget(self, table, v):
        keep = ~(1 << v)
        out: Table = {}
        for st, (c, _) in table.items():
            keep_min(out, (st[0] & keep, st[1] & keep), c, st)
        return out

    def join(self, left, right, bag):
        out = {}
        for st, (c1, _) in left.items():
            hit = right.get(st)
            if hit is not None:
                deleted = bag & ~(st[0] | st[1])
                out[st] = (c1 + hit[0] - deleted.bit_count(), (st, st))
        return out

    def cap_ok(self, st, slots):
        alive = st[0] | st[1]
        return all((sl & alive).bit_count() <= 2 for sl in slots)

    def in_solution(self, v, st):
        return not ((st[0] | st[1]) >> v) & 1


def _block(part: tuple[int, ...], v: int) -> int:
    for b in part:
        if (b >> v) & 1:
            return b
    raise KeyError(v)


class FeedbackVertexSet(DpProblem):
    """Forest-plus-apex formulation on ``G' = G + v0``.

    State: ``(Y, P)`` with ``Y`` the surviving bag vertices and ``P`` the
    partition of ``Y`` into connected blocks of the chosen forest edges (a
    sorted tuple of masks).  Edges to ``v0`` are optional and each component
    of the final forest has to be hooked to ``v0`` by exactly one of them, so
    at the root the chosen edges form one spanning tree: ``j = i - 1``.  The
    table keeps, per ``(Y, P)``, the fewest deletions; the survivor count is
    ``i = introduced - deletions`` and the edge count is ``j = i - |P|``.

    With ``lazy_apex`` (the default) an edge to ``v0`` is taken only when its
    other endpoint is the last bag vertex of its block.  This relies on the
    edge being introduced just before that endpoint is forgotten, which
    ``refine_to_nice`` guarantees because ``v0`` carries the largest id.
    """

    kind = "FVS"
    final_state = (0, ())

    def __init__(self, g: Graph, v0: int, lazy_apex: bool = True):
        super().__init__(g)
        self.v0 = v0
        self.lazy_apex = lazy_apex

    def leaf(self) -> Table:
        return {(0, ()): (0, None)}

    def introduce(self, table, v, child_bag, slots):
        vb = 1 << v
        out: Table = {}
        if v == self.v0:
            for st, (c, _) in table.items():
                y, part = st
                out[(y | vb, tuple(sorted(part + (vb,))))] = (c, st)
            return out
        sl = slot_of(v, slots)
        for st, (c, _) in table.items():
            y, part = st
            out[st] = (c + 1, st)
            if (y & sl).bit_count() <= 1:
                out[(y | vb, tuple(sorted(part + (vb,))))] = (c, st)
        return out

    def introduce_edge(self, table, u, w):
        optional = self.v0 in (u, w)
        pair = (1 << u) | (1 << w)
        out: Table = {}
        for st, (c, _) in table.items():
            y, part = st
            if y & pair != pair:
                keep_min(out, st, c, st)
                continue
            bu, bw = _block(part, u), _block(part, w)
            if optional and self.lazy_apex:
                # hook a block to v0 only through its last bag vertex, right before that vertex
                # is forgotten; every forest then has exactly one representative
                lone = bw if u == self.v0 else bu
                if lone.bit_count() > 1:
                    keep_min(out, st, c, st)
                    continue
            elif optional:
                keep_min(out, st, c, st)
            if bu == bw:
                continue  # the edge would close a cycle
            merged = tuple(sorted([b for b in part if b != bu and b != bw] + [bu | bw]))
            keep_min(out, (y, merged), c, st)
        return out

    def forget(self, table, v):
        vb = 1 << v
        out: Table = {}
        for st, (c, _) in table.items():
            y, part = st
            if not y & vb:
                keep_min(out, st, c, st)
                continue
            if v == self.v0:
                # final acceptance: everything left hangs off v0 as a single tree
                if part == (vb,):
                    keep_min(out, (0, ()), c, st)
                continue
            b = _block(part, v)
            rest = b & ~vb
            if not rest:
                continue  # that component can no longer reach v0
            new_part = tuple(sorted([x for x in part if x != b] + [rest]))
            keep_min(out, (y & ~vb, new_part), c, st)
        return out

    def join(self, left, right, bag):
        by_y: dict[int, list] = {}
        for st, (c2, _) in right.items():
            by_y.setdefault(st[0], []).append((st, c2))
        out: Table = {}
        for st1, (c1, _) in left.items():
            y, p1 = st1
            matches = by_y.get(y)
            if not matches:
                continue
            deleted = (bag & ~y).bit_count()
            size_y = y.bit_count()
            for st2, c2 in matches:
                p2 = st2[1]
                blocks = list(p1)
                for b in p2:
                    hit = 0
                    kept = []
                    for x in blocks:
                        if x & b:
                            hit |= x
                        else:
                            kept.append(x)
                    kept.append(hit | b)
                    blocks = kept
                # gluing two forests stays acyclic iff no components are lost beyond the shared vertices
                if len(blocks) != len(p1) + len(p2) - size_y:
                    continue
                keep_min(out, (y, tuple(sorted(blocks))), c1 + c2 - deleted, (st1, st2))
        return out

    def cap_ok(self, st, slots):
        y = st[0]
        return all((sl & y).bit_count() <= 2 for sl in slots)

    def in_solution(self, v, st):
        return not (st[0] >> v) & 1
