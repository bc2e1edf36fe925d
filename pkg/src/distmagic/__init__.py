"""Distance magic and balanced distance magic labelings of graphs and
graph products: generators, verification, explicit constructions, label
rearrangement, and exhaustive search."""

from .errors import InputError
from .graphs import (
    Graph,
    GraphKind,
    complete_bipartite,
    complete_minus_matching,
    cycle,
    empty_graph,
    format_edge_list,
    generate,
    is_bipartite,
    is_connected,
    parse_edge_list,
    path,
    regularity,
)
from .magic import (
    Labeling,
    VerifyReport,
    eit_schedule,
    odd_regular_obstruction,
    theoretical_k,
    verify_balanced,
    verify_distance_magic,
    weight,
    weights,
)
from .products import (
    CARTESIAN,
    DIRECT,
    LEXICOGRAPHIC,
    ProductGraph,
    layer,
    neighborhood_product_check,
    product,
)

__all__ = [
    "CARTESIAN",
    "DIRECT",
    "Graph",
    "GraphKind",
    "InputError",
    "LEXICOGRAPHIC",
    "Labeling",
    "ProductGraph",
    "VerifyReport",
    "complete_bipartite",
    "complete_minus_matching",
    "cycle",
    "eit_schedule",
    "empty_graph",
    "format_edge_list",
    "generate",
    "is_bipartite",
    "is_connected",
    "layer",
    "neighborhood_product_check",
    "odd_regular_obstruction",
    "parse_edge_list",
    "path",
    "product",
    "regularity",
    "theoretical_k",
    "verify_balanced",
    "verify_distance_magic",
    "weight",
    "weights",
]
