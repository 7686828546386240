"""ctl: chromatic-threshold toolkit.

Extremal graph constructions, exact invariants (chromatic and fractional
chromatic number, clique, independence, VC dimension), threshold
classification, and machine-checkable stability certificates, all at desk
scale with exact rational arithmetic.
"""

from .graph import (
    Budget,
    BudgetExceeded,
    CtlError,
    FormatError,
    Graph,
    ParameterError,
    VertexCapExceeded,
    blowup,
    disjoint_union,
    graph_from_edges,
    join,
    parse_graph,
    serialize_graph,
)

SCHEMA = "ctl/1"

__all__ = [
    "Budget",
    "BudgetExceeded",
    "CtlError",
    "FormatError",
    "Graph",
    "ParameterError",
    "VertexCapExceeded",
    "SCHEMA",
    "blowup",
    "disjoint_union",
    "graph_from_edges",
    "join",
    "parse_graph",
    "serialize_graph",
]
