"""Vertex cover when a chordal modulator is handed in."""

from __future__ import annotations

from collections.abc import Iterable

from ..chordal import _require_chordal, chordal_max_independent_set
from ..graph import Graph, induced_subgraph, iter_bits, mask_of
from ..solution import Solution


def solve_vc_given_modulator(g: Graph, modulator: Iterable[int], target: int | None = None) -> Solution:
    """Minimum vertex cover from a set ``S`` with ``G - S`` chordal.

    Guess the part ``X`` of ``S`` inside the cover; the rest of ``S`` must be
    independent, which forces its outside neighbours into the cover, and the
    remaining chordal graph is solved by a maximum independent set along a
    perfect elimination order.
    """
    s = sorted(set(modulator))
    g.check_range(s)
    sm = mask_of(s)
    outside = g.full_mask & ~sm
    _require_chordal(induced_subgraph(g, iter_bits(outside))[0], "G - S")
    best = None
    for bits in range(1 << len(s)):
        x = mask_of(v for i, v in enumerate(s) if (bits >> i) & 1)
        free = sm & ~x
        if any(g.masks[v] & free for v in iter_bits(free)):
            continue
        forced = 0
        for v in iter_bits(free):
            forced |= g.masks[v]
        forced &= outside
        remaining = outside & ~forced
        indep = chordal_max_independent_set(g, remaining)
        cover = x | forced | (remaining & ~indep)
        if best is None or cover.bit_count() < best.bit_count():
            best = cover
    return Solution("VC", frozenset(iter_bits(best)), target,
                    {"method": "modulator", "modulator_size": len(s)})
