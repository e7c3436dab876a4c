"""Brute-force reference solvers and solution verifiers.

Everything here is deliberately naive: subsets are scanned by increasing
size (lexicographically within a size), so the first hit is a minimum and
the witness is the lexicographically smallest one of that size.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from itertools import combinations

from .chordal import is_chordal
from .errors import NoSolution, TooLarge
from .generators import HittingSetInstance
from .graph import Graph, induced_subgraph, iter_bits, mask_of, reachable_mask
from .solution import Solution

DEFAULT_MAX_N = {"VC": 18, "FVS": 16, "OCT": 16, "CVD": 16, "SEPARATOR": 16, "MULTIWAY": 16, "CLIQUES": 16}


@dataclass(frozen=True)
class OracleBudget:
    """Vertex cap for the exponential searches."""

    max_n: int

    def check(self, n: int, what: str) -> None:
        if n > self.max_n:
            raise TooLarge(f"{what}: n={n} exceeds oracle cap {self.max_n}")


def _budget(kind: str, budget: OracleBudget | int | None) -> OracleBudget:
    if budget is None:
        return OracleBudget(DEFAULT_MAX_N[kind])
    if isinstance(budget, int):
        return OracleBudget(budget)
    return budget


# -- verifiers --------------------------------------------------------------

def _rest(g: Graph, x: Iterable[int]) -> int:
    return g.full_mask & ~mask_of(v for v in x if 0 <= v < g.n)


def _independent(g: Graph, r: int) -> bool:
    return all(not (g.masks[v] & r) for v in iter_bits(r))


def _forest(g: Graph, r: int) -> bool:
    edges2 = sum((g.masks[v] & r).bit_count() for v in iter_bits(r))
    comps, left = 0, r
    while left:
        comp = reachable_mask(g, left & -left, r)
        left &= ~comp
        comps += 1
    return edges2 // 2 == r.bit_count() - comps


def _bipartite(g: Graph, r: int) -> bool:
    color: dict[int, int] = {}
    for s in iter_bits(r):
        if s in color:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in iter_bits(g.masks[v] & r):
                if w not in color:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def _chordal_rest(g: Graph, r: int) -> bool:
    sub, _ = induced_subgraph(g, iter_bits(r))
    return is_chordal(sub)[0]


def verify_vc(g: Graph, x: Iterable[int]) -> bool:
    return _independent(g, _rest(g, x))


def verify_fvs(g: Graph, x: Iterable[int]) -> bool:
    return _forest(g, _rest(g, x))


def verify_oct(g: Graph, x: Iterable[int]) -> bool:
    return _bipartite(g, _rest(g, x))


def verify_cvd(g: Graph, x: Iterable[int]) -> bool:
    return _chordal_rest(g, _rest(g, x))


VERIFIERS = {"VC": verify_vc, "FVS": verify_fvs, "OCT": verify_oct, "CVD": verify_cvd}
_RESIDUAL = {"VC": _independent, "FVS": _forest, "OCT": _bipartite, "CVD": _chordal_rest}


def verify_solution(g: Graph, sol: Solution) -> bool:
    return VERIFIERS[sol.kind](g, sol.vertices)


def uncovered_edges(g: Graph, x: Iterable[int]) -> list[tuple[int, int]]:
    xs = set(x)
    return [(u, v) for u, v in g.edges() if u not in xs and v not in xs]


# -- exhaustive minimizers --------------------------------------------------

def _subsets_by_size(pool: list[int], max_size: int | None = None) -> Iterator[int]:
    top = len(pool) if max_size is None else min(max_size, len(pool))
    for size in range(top + 1):
        for combo in combinations(pool, size):
            yield mask_of(combo)


def _brute(kind: str, g: Graph, budget) -> Solution:
    _budget(kind, budget).check(g.n, f"brute {kind}")
    ok = _RESIDUAL[kind]
    full = g.full_mask
    for x in _subsets_by_size(list(range(g.n))):
        if ok(g, full & ~x):
            return Solution(kind, frozenset(iter_bits(x)))
    raise AssertionError("deleting every vertex always works")


def brute_vc(g: Graph, budget: OracleBudget | int | None = None) -> Solution:
    return _brute("VC", g, budget)


def brute_fvs(g: Graph, budget: OracleBudget | int | None = None) -> Solution:
    return _brute("FVS", g, budget)


def brute_oct(g: Graph, budget: OracleBudget | int | None = None) -> Solution:
    return _brute("OCT", g, budget)


def brute_cvd(g: Graph, budget: OracleBudget | int | None = None) -> Solution:
    return _brute("CVD", g, budget)


BRUTE = {"VC": brute_vc, "FVS": brute_fvs, "OCT": brute_oct, "CVD": brute_cvd}


def _separates(g: Graph, x: int, am: int, bm: int) -> bool:
    alive = g.full_mask & ~x
    return not reachable_mask(g, am & alive, alive) & bm


def brute_min_separator(g: Graph, a: Iterable[int], b: Iterable[int], *,
                        allow_terminals: bool = True,
                        budget: OracleBudget | int | None = None) -> frozenset[int]:
    """Smallest vertex set meeting every ``A``-``B`` path.

    With ``allow_terminals=False`` the set must avoid ``A`` and ``B``;
    ``NoSolution`` is raised when an ``A``-``B`` edge makes that impossible.
    """
    _budget("SEPARATOR", budget).check(g.n, "brute separator")
    am, bm = mask_of(a), mask_of(b)
    banned = 0 if allow_terminals else am | bm
    pool = [v for v in range(g.n) if not (banned >> v) & 1]
    for x in _subsets_by_size(pool):
        if _separates(g, x, am, bm):
            return frozenset(iter_bits(x))
    raise NoSolution("terminal sets cannot be separated without deleting terminals")


def brute_multiway_cut(g: Graph, terminals: Iterable[int], k: int | None = None, *,
                       budget: OracleBudget | int | None = None) -> frozenset[int]:
    """Smallest ``X`` avoiding the terminals that cuts every path between two of them."""
    _budget("MULTIWAY", budget).check(g.n, "brute multiway cut")
    ts = sorted(set(terminals))
    tm = mask_of(ts)
    pool = [v for v in range(g.n) if not (tm >> v) & 1]
    for x in _subsets_by_size(pool, k):
        alive = g.full_mask & ~x
        if all(not reachable_mask(g, 1 << t, alive) & tm & ~(1 << t) for t in ts):
            return frozenset(iter_bits(x))
    raise NoSolution(f"no multiway cut of size <= {k}")


def brute_hitting_set(hs: HittingSetInstance) -> frozenset[int]:
    sets = [mask_of(s) for s in hs.family]
    for x in _subsets_by_size(list(range(hs.universe_size))):
        if all(s & x for s in sets):
            return frozenset(iter_bits(x))
    raise NoSolution("family contains an empty set")


def brute_maximal_cliques(g: Graph, budget: OracleBudget | int | None = None) -> list[frozenset[int]]:
    """Every maximal clique, found by testing all ``2^n`` vertex subsets."""
    _budget("CLIQUES", budget).check(g.n, "brute maximal cliques")
    out = []
    for r in range(1 << g.n):
        if not all((g.masks[v] | (1 << v)) & r == r for v in iter_bits(r)):
            continue
        if not r or any(g.masks[u] & r == r for u in range(g.n) if not (r >> u) & 1):
            continue
        out.append(frozenset(iter_bits(r)))
    return sorted(out, key=sorted)
