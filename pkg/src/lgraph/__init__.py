"""Logical graphs: a labelled-DAG normal form for MILL formulas.

The kernel validates graph shape, decides vertex alpha-equivalence, builds
graphs algebraically (addition, subtraction, implication), and translates
between formulas and graphs so that the symmetric variants of a formula
(commuted tensors, curried implications, dropped units) share one canonical
form.
"""

from .algebra import SumResult, add, empty, implies, singleton, subtract, vertex_equivalent
from .core import (
    CyclicEdges,
    Error,
    LabelId,
    LogicalGraph,
    NotASubgraphByName,
    NotWellFormed,
    RawGraph,
    SubgraphRelation,
    UnknownVertex,
    VertexId,
    VSet,
    assumption_graph,
    conclusions,
    from_json,
    full_assumption_graph,
    induced_subgraph,
    predecessors,
    rename_apart,
    rename_graph,
    subgraph_relation,
    successors,
    to_json,
    validate,
    vset,
)
from .iso import VMap, alpha_equiv, alpha_equiv_all, mk_graph_iso, vertex_match_perms
from .mill import (
    Atom,
    Decomposition,
    DecompositionPart,
    Formula,
    Lolli,
    NotInFragment,
    ParseError,
    Tensor,
    Unit,
    canonical_key,
    decompose,
    normalize,
    parse,
    print_formula,
    to_formula,
    to_graph,
)
from .oracle import BoundsTooLarge, enumerate_formulas, naive_iso, rewrite_variants
from .traversal import Action, fold_reachable, traverse_dfs

__all__ = [
    "Action",
    "Atom",
    "BoundsTooLarge",
    "CyclicEdges",
    "Decomposition",
    "DecompositionPart",
    "Error",
    "Formula",
    "LabelId",
    "LogicalGraph",
    "Lolli",
    "NotASubgraphByName",
    "NotInFragment",
    "NotWellFormed",
    "ParseError",
    "RawGraph",
    "SubgraphRelation",
    "SumResult",
    "Tensor",
    "Unit",
    "UnknownVertex",
    "VMap",
    "VSet",
    "VertexId",
    "add",
    "alpha_equiv",
    "alpha_equiv_all",
    "assumption_graph",
    "canonical_key",
    "conclusions",
    "decompose",
    "empty",
    "enumerate_formulas",
    "fold_reachable",
    "from_json",
    "full_assumption_graph",
    "implies",
    "induced_subgraph",
    "mk_graph_iso",
    "naive_iso",
    "normalize",
    "parse",
    "predecessors",
    "print_formula",
    "rename_apart",
    "rename_graph",
    "rewrite_variants",
    "singleton",
    "subgraph_relation",
    "subtract",
    "successors",
    "to_formula",
    "to_graph",
    "to_json",
    "traverse_dfs",
    "validate",
    "vertex_equivalent",
    "vertex_match_perms",
    "vset",
]
