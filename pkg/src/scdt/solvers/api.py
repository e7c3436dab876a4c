"""Entry points: decompose, refine, run the table DP, return a verified optimum."""

from __future__ import annotations

from ..decompose import decompose
from ..graph import Graph
from ..nice import NiceDecomposition, refine_to_nice, with_apex
from ..oracles import VERIFIERS
from ..solution import Solution
from ..td import SemiCliqueTreeDecomposition
from .engine import DpProblem, run_dp
from .problems import FeedbackVertexSet, OddCycleTransversal, VertexCover


def _finish(problem: DpProblem, g: Graph, nd: NiceDecomposition, target: int | None,
            check: bool, extra: dict) -> Solution:
    res = run_dp(problem, nd, check_caps=check)
    chosen = res.solution
    if len(chosen) != res.cost:
        raise AssertionError(f"witness size {len(chosen)} differs from optimum {res.cost}")
    if not VERIFIERS[problem.kind](g, chosen):
        raise AssertionError(f"{problem.kind} witness fails verification")
    stats = {"nice_nodes": len(nd), "max_table": res.max_table, "total_states": res.total_states, **extra}
    return Solution(problem.kind, chosen, target, stats)


def _prepare(g: Graph, k: int, td: SemiCliqueTreeDecomposition | None, check: bool):
    if td is None:
        td = decompose(g, k, check=check)
    return td


def solve_vc(g: Graph, k: int, target: int | None = None, *,
             td: SemiCliqueTreeDecomposition | None = None, check: bool = False) -> Solution:
    """Minimum vertex cover, or ``NoCvdConclusion`` if the promise ``CVD <= k`` is refuted."""
    td = _prepare(g, k, td, check)
    nd = refine_to_nice(td, g, validate=check)
    return _finish(VertexCover(g), g, nd, target, check, {"bags": len(td), "k": k})


def solve_oct(g: Graph, k: int, target: int | None = None, *,
              td: SemiCliqueTreeDecomposition | None = None, check: bool = False) -> Solution:
    """Minimum odd cycle transversal, or ``NoCvdConclusion``."""
    td = _prepare(g, k, td, check)
    nd = refine_to_nice(td, g, validate=check)
    return _finish(OddCycleTransversal(g), g, nd, target, check, {"bags": len(td), "k": k})


def solve_fvs(g: Graph, k: int, target: int | None = None, *,
              td: SemiCliqueTreeDecomposition | None = None, check: bool = False) -> Solution:
    """Minimum feedback vertex set, or ``NoCvdConclusion``.

    Runs on ``G + v0`` with ``v0`` universal and present in every bag.  The
    best accepted root state has ``i`` survivors (``v0`` included) and
    ``j = i - 1`` chosen edges; the answer is ``|V| + 1 - i``.
    """
    td = _prepare(g, k, td, check)
    td2, g2 = with_apex(td, g)
    nd = refine_to_nice(td2, g2, validate=check)
    sol = _finish(FeedbackVertexSet(g2, g.n), g, nd, target, check, {"bags": len(td), "k": k})
    i = g.n + 1 - sol.size
    sol.stats.update(survivors_with_apex=i, forest_edges=i - 1)
    return sol


SOLVERS = {"VC": solve_vc, "FVS": solve_fvs, "OCT": solve_oct}
