"""Explicit listing of the admissible per-bag states for each problem."""

from __future__ import annotations

from collections.abc import Iterator
from itertools import combinations, product

from ..td import SemiCliqueBag


def _subsets(items: list[int], max_size: int | None = None) -> list[tuple[int, ...]]:
    top = len(items) if max_size is None else min(max_size, len(items))
    return [c for r in range(top + 1) for c in combinations(items, r)]


def set_partitions(items: list[int]) -> Iterator[tuple[frozenset[int], ...]]:
    """All partitions of ``items`` into nonempty blocks (restricted-growth order)."""
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield (frozenset([first]),) + part
        for i in range(len(part)):
            yield part[:i] + (part[i] | {first},) + part[i + 1:]


def enumerate_bag_states(bag: SemiCliqueBag, kind: str) -> Iterator:
    """States of one bag obeying the per-clique caps.

    ``VC``: cover sets ``Y`` missing at most one vertex of every clique slot.
    ``OCT``: labelings ``(Y1, Y2, Y3)`` with at most two survivors per slot.
    ``FVS``: ``(Y, partition of Y)`` with at most two survivors per slot.
    Every state appears exactly once, in a fixed order.
    """
    kind = kind.upper()
    slots = [sorted(c) for c in bag.cliques if c]
    rest = sorted(bag.rest)
    if kind == "VC":
        slot_opts = [[frozenset(c)] + [frozenset(c) - {v} for v in c] for c in slots]
        for pick in product(*slot_opts):
            base = frozenset().union(*pick)
            for sub in _subsets(rest):
                yield base | frozenset(sub)
    elif kind == "OCT":
        per_slot = []
        for c in slots:
            opts = []
            for surv in _subsets(c, 2):
                for sides in product((1, 2), repeat=len(surv)):
                    opts.append(dict(zip(surv, sides)))
            per_slot.append(opts)
        for pick in product(*per_slot):
            fixed: dict[int, int] = {}
            for d in pick:
                fixed.update(d)
            for labels in product((1, 2, 3), repeat=len(rest)):
                lab = dict(fixed)
                lab.update(zip(rest, labels))
                all_v = [v for c in slots for v in c] + rest
                y1 = frozenset(v for v in all_v if lab.get(v) == 1)
                y2 = frozenset(v for v in all_v if lab.get(v) == 2)
                y3 = frozenset(all_v) - y1 - y2
                yield y1, y2, y3
    elif kind == "FVS":
        for pick in product(*[_subsets(c, 2) for c in slots]):
            base = [v for p in pick for v in p]
            for sub in _subsets(rest):
                y = sorted(base + list(sub))
                for part in set_partitions(y):
                    yield frozenset(y), part
    else:
        raise ValueError(f"unknown problem kind {kind!r}")
