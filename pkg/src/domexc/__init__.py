"""Exact analysis of domination-type parameters on small graphs.

Bitmask graphs up to 64 vertices, eight domination-type parameters with
full optimal-set enumeration, pattern excellence and excellent families,
graph6 reading and writing, canonical keys, isomorph-free catalogs,
excellent-tree machinery, and a claim verification suite behind the
domexc command line tool.
"""

__version__ = "0.1.0"

from .canon import (
    IsoKey,
    TreeKey,
    are_isomorphic,
    canonical_key,
    induced_copies,
    iter_induced_copies,
    tree_key,
)
from .catalog import (
    Catalog,
    CatalogQuery,
    SearchMatch,
    generate_all_graphs,
    generate_regular,
    load_catalog,
    save_catalog,
    search,
)
from .claims import Claim, ClaimReport, claim_ids, run_claim, run_suite
from .domination import (
    PARAM_IDS,
    BoundCheck,
    Param,
    ParameterUndefinedError,
    ParamResult,
    bound_checks,
    critical_split,
    is_edge_addition_critical,
    min_sets,
    param_value,
    private_neighbors,
    satisfies,
)
from .excellence import (
    FamilyResult,
    describe_pattern,
    excellent_family,
    family_names,
    is_excellent,
    is_pattern_excellent,
    sets_union,
)
from .graph6 import Graph6Error, from_graph6, parse_lines, to_graph6
from .graphs import (
    CapacityError,
    Coalescence,
    Graph,
    cartesian_product,
    coalescence,
    complete,
    complete_multipartite,
    corona1,
    cycle,
    disjoint_union,
    edgeless,
    fiber_mask,
    from_edges,
    lex_product,
    path,
    product_layer,
)
from .trees import (
    LabeledTree,
    corona_base,
    enumerate_trees,
    excellent_tree_labeling,
    glue_corona,
    is_labeled_corona,
    labeled_corona,
    leaves_mask,
    tree_family_prediction,
)

__all__ = [
    "__version__",
    "BoundCheck",
    "CapacityError",
    "Catalog",
    "CatalogQuery",
    "Claim",
    "ClaimReport",
    "Coalescence",
    "FamilyResult",
    "Graph",
    "Graph6Error",
    "IsoKey",
    "LabeledTree",
    "PARAM_IDS",
    "Param",
    "ParamResult",
    "ParameterUndefinedError",
    "SearchMatch",
    "TreeKey",
    "are_isomorphic",
    "bound_checks",
    "canonical_key",
    "cartesian_product",
    "claim_ids",
    "coalescence",
    "complete",
    "complete_multipartite",
    "corona1",
    "corona_base",
    "critical_split",
    "cycle",
    "describe_pattern",
    "disjoint_union",
    "edgeless",
    "enumerate_trees",
    "excellent_family",
    "excellent_tree_labeling",
    "family_names",
    "fiber_mask",
    "from_edges",
    "from_graph6",
    "generate_all_graphs",
    "generate_regular",
    "glue_corona",
    "induced_copies",
    "is_edge_addition_critical",
    "is_excellent",
    "is_labeled_corona",
    "is_pattern_excellent",
    "iter_induced_copies",
    "labeled_corona",
    "leaves_mask",
    "lex_product",
    "load_catalog",
    "min_sets",
    "param_value",
    "parse_lines",
    "path",
    "private_neighbors",
    "product_layer",
    "run_claim",
    "run_suite",
    "satisfies",
    "save_catalog",
    "search",
    "sets_union",
    "to_graph6",
    "tree_family_prediction",
    "tree_key",
]
