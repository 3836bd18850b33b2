"""Isomorph-free generation, canonical codes, extremal scans, lemma audits."""

from .audit import AuditReport, lemma_audit
from .canonical import abstract_canonical_form, canonical_code
from .expand import generate_all, pseudo_double_wheel
from .growth import generate_degree_bounded
from .scan import ExtremalRecord, extremal_scan

__all__ = [
    "AuditReport",
    "ExtremalRecord",
    "abstract_canonical_form",
    "canonical_code",
    "extremal_scan",
    "generate_all",
    "generate_degree_bounded",
    "lemma_audit",
    "pseudo_double_wheel",
]
