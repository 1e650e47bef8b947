"""Marked Dynkin diagram calculus for Springer resolutions and Mukai flops."""

from .diagram import (
    Component,
    DynkinType,
    MarkedDiagram,
    component_involution,
    delete_vertices,
    parse_diagram,
)
from .flops import (
    DIVISORIAL,
    FLOP,
    AdjacencyMove,
    FlipClass,
    FlopGraph,
    chamber_report,
    classify_single,
    equivalence_class,
    moves_from,
)
from .orbitdata import OrbitRecord, boundary_codim2, richardson, springer_resolvable
from .partitions import (
    ClassicalFamily,
    Degree,
    Partition,
    codim2_witness,
    collapse,
    degree_one_parity,
    dual,
    levi_type,
    orbit_dim,
)

__version__ = "0.1.0"
