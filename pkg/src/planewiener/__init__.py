"""Exact Wiener-index and remoteness tooling for plane triangulations and
quadrangulations: embedded graphs as rotation systems, isomorph-free
enumeration with extremal scans, closed-form bounds, and the parametric
extremal families."""

from .connectivity import ConnectivityResult, vertex_connectivity
from .enumeration import (
    AuditReport,
    ExtremalRecord,
    canonical_code,
    extremal_scan,
    generate_all,
    generate_degree_bounded,
    lemma_audit,
)
from .errors import PlaneWienerError
from .families import (
    FamilyId,
    GadgetKind,
    build_family,
    build_gadget,
    build_minimizer,
)
from .formulas import (
    GraphClass,
    LayerVariant,
    conjectured_wiener,
    layer_functional,
    optimal_layer_sequence,
    remoteness_bound,
    sigma_bound_general,
    wiener_path_bound,
)
from .metrics import DistanceProfile, distance_profile, remoteness, wiener
from .plane_graph import ClassReport, PlaneGraph, build_from_rotation, classify, trace_faces

__version__ = "0.1.0"

__all__ = [
    "AuditReport",
    "ClassReport",
    "ConnectivityResult",
    "DistanceProfile",
    "ExtremalRecord",
    "FamilyId",
    "GadgetKind",
    "GraphClass",
    "LayerVariant",
    "PlaneGraph",
    "PlaneWienerError",
    "build_family",
    "build_from_rotation",
    "build_gadget",
    "build_minimizer",
    "canonical_code",
    "classify",
    "conjectured_wiener",
    "distance_profile",
    "extremal_scan",
    "generate_all",
    "generate_degree_bounded",
    "layer_functional",
    "lemma_audit",
    "optimal_layer_sequence",
    "remoteness",
    "remoteness_bound",
    "sigma_bound_general",
    "trace_faces",
    "vertex_connectivity",
    "wiener",
    "wiener_path_bound",
]
