"""Semi-clique tree decompositions for graphs close to chordal.

Given a promised bound ``k`` on the size of a chordal vertex deletion set,
``decompose`` builds a tree decomposition whose bags are each at most four
cliques plus ``7k + 5`` further vertices, or proves the promise false.  The
solvers run exact dynamic programs over it for vertex cover, feedback vertex
set and odd cycle transversal.
"""

from .chordal import (
    CliqueBudget,
    EliminationOrder,
    chordal_maximal_cliques,
    clique_tree,
    enumerate_maximal_cliques,
    is_chordal,
    modulator_semi_clique_td,
)
from .decompose import DecomposeFrame, budget_for, decompose, decompose_rec, split_cliques
from .errors import (
    BudgetExceeded,
    InputError,
    LimitExceeded,
    NoCvdConclusion,
    NonChordalInput,
    NoSolution,
    ParseError,
    PreconditionViolated,
    ScdtError,
    TooLarge,
    ValidationError,
)
from .generators import (
    HittingSetInstance,
    PlantedInstance,
    gen_planted,
    hitting_set_vc_instance,
    triangulate_for_fvs_oct,
)
from .graph import Graph, connected_components, induced_subgraph, open_neighborhood
from .io import read_decomposition, read_graph, write_decomposition, write_graph
from .nice import NiceDecomposition, NiceNode, refine_to_nice, validate_nice
from .oracles import (
    OracleBudget,
    brute_cvd,
    brute_fvs,
    brute_hitting_set,
    brute_maximal_cliques,
    brute_min_separator,
    brute_multiway_cut,
    brute_oct,
    brute_vc,
    verify_cvd,
    verify_fvs,
    verify_oct,
    verify_vc,
)
from .separators import (
    NaNbSplit,
    SemiCliqueSeparator,
    Separation,
    balanced_separation_from_separator,
    find_balanced_split,
    min_vertex_cut,
    node_multiway_cut,
    three_clique_separator,
    tree_triple_split,
)
from .solution import Solution
from .solvers import enumerate_bag_states, solve_fvs, solve_oct, solve_vc, solve_vc_given_modulator
from .td import SemiCliqueBag, SemiCliqueTreeDecomposition, ValidationReport, Violation, validate_td

__version__ = "0.1.0"
