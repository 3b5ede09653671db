"""Borel-fixed ideals, their rational deformations and deformation graphs."""

from .borel import (
    BorelIdeal,
    BorelSet,
    enumerate_ideals,
    format_ideal,
    global_maximal,
    global_minimal,
    hilbert_polynomial_of,
    maximal_elements,
    minimal_elements,
    parse_ideal,
    saturate,
    strata,
    truncate,
)
from .deform import (
    Composition,
    DecMoveFamily,
    Deformation,
    all_deformations,
    compatible,
    compose,
    decreasing_family,
    is_borel_consistent,
    to_deformation,
    verify_flat,
)
from .graphs import DeformGraph, analyze, deformation_graph, export, incidence_graph
from .hilbert import (
    HilbertPolynomial,
    complement,
    delta,
    gotzmann_decomposition,
    gotzmann_number,
    parse_polynomial,
)
from .monomial import Monomial, TermOrder, borel_leq, compare, move_down, move_up, parse_monomial, parse_order
from .segment import SegmentCertificate, find_segment_order, verify_certificate

__version__ = "0.1.0"

__all__ = [
    "BorelIdeal",
    "BorelSet",
    "Composition",
    "DecMoveFamily",
    "DeformGraph",
    "Deformation",
    "HilbertPolynomial",
    "Monomial",
    "SegmentCertificate",
    "TermOrder",
    "all_deformations",
    "analyze",
    "borel_leq",
    "compare",
    "compatible",
    "complement",
    "compose",
    "decreasing_family",
    "deformation_graph",
    "delta",
    "enumerate_ideals",
    "export",
    "find_segment_order",
    "format_ideal",
    "global_maximal",
    "global_minimal",
    "gotzmann_decomposition",
    "gotzmann_number",
    "hilbert_polynomial_of",
    "incidence_graph",
    "is_borel_consistent",
    "maximal_elements",
    "minimal_elements",
    "move_down",
    "move_up",
    "parse_ideal",
    "parse_monomial",
    "parse_order",
    "parse_polynomial",
    "saturate",
    "strata",
    "to_deformation",
    "truncate",
    "verify_certificate",
    "verify_flat",
]
