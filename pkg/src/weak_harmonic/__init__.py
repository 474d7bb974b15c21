"""Weak harmonic labelings of graphs and multigraphs."""

from .correspondence import (
    AxiomError,
    HarmonicCollection,
    NotationError,
    UnverifiedGraphError,
    build,
    check_axioms,
    extract,
    format_collection,
    parse_collection,
)
from .enumeration import Catalog, EnumOptions, brute_force_oracle, enumerate_catalog, sample_collection
from .graphs import GraphError, LabeledGraph, LabeledMultigraph, invert, is_connected, leaves
from .harmonic import av, harmonize_multiset, is_harmonic, verify_total, verify_weak, verify_weak_multi
from .total import NotAdmissibleError, TotalLabeling, check_admissible, minimize_weights, total_label

__version__ = "0.1.0"

__all__ = [
    "AxiomError",
    "Catalog",
    "EnumOptions",
    "GraphError",
    "HarmonicCollection",
    "LabeledGraph",
    "LabeledMultigraph",
    "NotAdmissibleError",
    "NotationError",
    "TotalLabeling",
    "UnverifiedGraphError",
    "av",
    "brute_force_oracle",
    "build",
    "check_admissible",
    "check_axioms",
    "enumerate_catalog",
    "extract",
    "format_collection",
    "harmonize_multiset",
    "invert",
    "is_connected",
    "is_harmonic",
    "leaves",
    "minimize_weights",
    "parse_collection",
    "sample_collection",
    "total_label",
    "verify_total",
    "verify_weak",
    "verify_weak_multi",
]
