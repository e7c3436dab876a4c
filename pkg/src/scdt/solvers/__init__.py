from .api import SOLVERS, solve_fvs, solve_oct, solve_vc
from .engine import DpProblem, DpResult, run_dp
from .modulator import solve_vc_given_modulator
from .problems import FeedbackVertexSet, OddCycleTransversal, VertexCover
from .states import enumerate_bag_states, set_partitions

__all__ = [
    "DpProblem",
    "DpResult",
    "FeedbackVertexSet",
    "OddCycleTransversal",
    "SOLVERS",
    "VertexCover",
    "enumerate_bag_states",
    "run_dp",
    "set_partitions",
    "solve_fvs",
    "solve_oct",
    "solve_vc",
    "solve_vc_given_modulator",
]
