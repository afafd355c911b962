"""Kauffman-Vogel polynomial of rigid-vertex spatial graph diagrams at B = A^-1, a = A."""

from .diagram import (
    Circuit,
    Diagram,
    DiagramError,
    GraphEdge,
    Node,
    circuits,
    diagram_components,
    graph_components,
    graph_edges,
    insert_curl,
    parse_diagram,
    serialize_diagram,
    smooth_A,
    smooth_B,
    vertexify,
)
from .invariant import (
    InvariantReport,
    PartitionClass,
    braces,
    bracket,
    compute_report,
    normalized,
    one_crossing_test,
    partition_classes,
)
from .laurent import LaurentPolynomial, monomial
from .orientation import (
    crossing_sign,
    enumerate_hyperbolic,
    hyperbolic_state_sum,
    is_separable,
    twisting_number,
    writhe,
)
from .skein import CapExceeded, oracle_bracket, skein_residual

__version__ = "0.1.0"
