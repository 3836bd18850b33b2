"""Parametric graph families, gadget plugs and Wiener minimizers."""

from __future__ import annotations

from enum import Enum

from ..errors import OrderOutOfDomain
from ..plane_graph import PlaneGraph
from .gadgets import build_fp, build_qp
from .quadrangulations import (
    build_minimizer_quad,
    build_nonsimple_quad,
    build_q2,
    build_q3,
)
from .triangulations import (
    build_minimizer_tri,
    build_nonsimple_tri,
    build_t3,
    build_t4,
    build_t5_remote,
    build_t5_wiener,
)


class FamilyId(Enum):
    T3 = "t3"
    T4 = "t4"
    T5_WIENER = "t5"
    T5_REMOTE_5K3 = "t5-remote"
    Q2 = "q2"
    Q3 = "q3"
    T_NONSIMPLE = "t-nonsimple"
    Q_NONSIMPLE = "q-nonsimple"
    T_MIN = "t-min"
    Q_MIN = "q-min"


class GadgetKind(Enum):
    F_P = "fp"
    F_P_OUTER = "fp-outer"
    Q_P = "qp"


_BUILDERS = {
    FamilyId.T3: build_t3,
    FamilyId.T4: build_t4,
    FamilyId.T5_WIENER: build_t5_wiener,
    FamilyId.T5_REMOTE_5K3: build_t5_remote,
    FamilyId.Q2: build_q2,
    FamilyId.Q3: build_q3,
    FamilyId.T_NONSIMPLE: build_nonsimple_tri,
    FamilyId.Q_NONSIMPLE: build_nonsimple_quad,
    FamilyId.T_MIN: build_minimizer_tri,
    FamilyId.Q_MIN: build_minimizer_quad,
}

#: smallest valid order and residue step per family
DOMAINS = {
    FamilyId.T3: (6, 1),
    FamilyId.T4: (6, 1),
    FamilyId.T5_WIENER: (22, 1),
    FamilyId.T5_REMOTE_5K3: (23, 5),
    FamilyId.Q2: (4, 1),
    FamilyId.Q3: (14, 1),
    FamilyId.T_NONSIMPLE: (16, 2),
    FamilyId.Q_NONSIMPLE: (14, 2),
    FamilyId.T_MIN: (5, 1),
    FamilyId.Q_MIN: (8, 2),
}


def family_orders(family: FamilyId, lo: int, hi: int):
    """Valid orders of the family within [lo, hi]."""
    base, step = DOMAINS[family]
    start = max(base, lo)
    for n in range(start, hi + 1):
        if (n - base) % step == 0:
            yield n


def build_family(family: FamilyId, n: int) -> PlaneGraph:
    """Construct the family member of order n.

    Raises OrderOutOfDomain when n violates the family's parity/residue or
    minimum-order constraints.
    """
    return _BUILDERS[family](n)


def build_gadget(kind: GadgetKind, p: int) -> PlaneGraph:
    if kind is GadgetKind.F_P:
        return build_fp(p)
    if kind is GadgetKind.F_P_OUTER:
        return build_fp(p, outer=True)
    return build_qp(p)


def build_minimizer(graph_class: str, n: int) -> PlaneGraph:
    if graph_class == "triangulation":
        return build_minimizer_tri(n)
    if graph_class == "quadrangulation":
        return build_minimizer_quad(n)
    raise OrderOutOfDomain(f"unknown class {graph_class!r}")
