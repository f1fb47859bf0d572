"""Minimum tessellation covers of simple graphs.

A tessellation partitions the vertices into cliques (polygons); a cover is a
set of tessellations whose internal edges together give every edge. The
tessellation number T(G) is the size of a smallest cover.
"""

from .cliques import CliqueGraph, clique_graph, maximal_cliques
from .coloring import Coloring, chromatic_index, chromatic_number, is_bipartite
from .graph import FamilySpec, Graph, GraphError, ParseError, export_annotated, gen_family, parse_graph, serialize_graph
from .solver import (
    BoundsReport,
    CoverResult,
    SearchTimeout,
    bounds,
    decide_k_tessellable,
    greedy_cover,
    lower_bound,
    maximal_polygon_check,
    tessellation_number,
    upper_bound_via_clique_coloring,
)
from .tessellation import (
    Tessellation,
    TessellationCover,
    edge_set,
    enumerate_tessellations,
    enumerate_tessellations_restricted,
    is_valid_cover,
    validate_tessellation,
)

__version__ = "0.1.0"
