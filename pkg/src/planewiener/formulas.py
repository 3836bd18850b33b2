"""Closed-form evaluators: path bound, conjectured maxima, remoteness bounds,
and the layer-sequence optimizer behind the 5-connected / 3-connected-quad
remoteness proofs.

Everything is exact; residue dispatch is explicit and the per-case integer
formulas are pre-cleared of denominators.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Tuple

from .errors import OrderOutOfDomain, SecondUndefined

Rational = Fraction


class GraphClass(Enum):
    TRI_3 = "tri3"
    TRI_4 = "tri4"
    TRI_5 = "tri5"
    QUAD_2 = "quad2"
    QUAD_3 = "quad3"

    @property
    def kappa(self) -> int:
        return {"tri3": 3, "tri4": 4, "tri5": 5, "quad2": 2, "quad3": 3}[self.value]

    @property
    def min_layer_width(self) -> int:
        return self.kappa


class NonSimpleClass(Enum):
    TRI_NONSIMPLE = "tri-nonsimple"
    QUAD_NONSIMPLE = "quad-nonsimple"


def wiener_path_bound(n: int) -> int:
    """(n-1)n(n+1)/6, attained exactly by paths."""
    if n < 1:
        raise OrderOutOfDomain(f"order {n} < 1")
    return (n - 1) * n * (n + 1) // 6


def conjectured_wiener(cls, n: int) -> int:
    """Conjectured maximum Wiener index for the class at order n.

    Residue cases, cleared of denominators (every value is an exact integer):

    TRI_3:  n=3k   (n^3+3n^2)/18        TRI_4:  n=4k,4k+2 (n^3+6n^2+8n-48)/24
            n=3k+1 (n^3+3n^2-4)/18              n=4k+3    (n^3+6n^2+5n-24)/24
            n=3k+2 (n^3+3n^2-2)/18              n=4k+1    (n^3+6n^2+5n-36)/24
    TRI_5:  (n^3+9n^2-46n+c)/30 with c = 1008, 930, 966, 960, 936
            for n = 5k+2, 5k+3, 5k+4, 5k, 5k+1.
    QUAD_2: n=2k (n^3+14n-24)/12, n=2k+1 (n^3+11n-12)/12.
    QUAD_3: (n^3+6n^2-51n+c)/18 with c = 412, 360, 368
            for n = 3k+14, 3k+15, 3k+16.
    Non-simple variants (even n): tri (n^3+8n-12)/12, quad (n^3+3n^2-4n)/12.
    """
    if isinstance(cls, NonSimpleClass):
        if n < 4 or n % 2:
            raise OrderOutOfDomain(f"non-simple variants need even n >= 4, got {n}")
        if cls is NonSimpleClass.TRI_NONSIMPLE:
            return (n**3 + 8 * n - 12) // 12
        return (n**3 + 3 * n**2 - 4 * n) // 12
    if cls is GraphClass.TRI_3:
        if n < 4:
            raise OrderOutOfDomain(f"triangulations need n >= 4, got {n}")
        c = {0: 0, 1: -4, 2: -2}[n % 3]
        return (n**3 + 3 * n**2 + c) // 18
    if cls is GraphClass.TRI_4:
        if n < 6:
            raise OrderOutOfDomain(f"4-connected triangulations need n >= 6, got {n}")
        c = {0: (8, -48), 1: (5, -36), 2: (8, -48), 3: (5, -24)}[n % 4]
        return (n**3 + 6 * n**2 + c[0] * n + c[1]) // 24
    if cls is GraphClass.TRI_5:
        if n < 12:
            raise OrderOutOfDomain(f"5-connected triangulations need n >= 12, got {n}")
        c = {2: 1008, 3: 930, 4: 966, 0: 960, 1: 936}[n % 5]
        return (n**3 + 9 * n**2 - 46 * n + c) // 30
    if cls is GraphClass.QUAD_2:
        if n < 4:
            raise OrderOutOfDomain(f"quadrangulations need n >= 4, got {n}")
        if n % 2 == 0:
            return (n**3 + 14 * n - 24) // 12
        return (n**3 + 11 * n - 12) // 12
    if cls is GraphClass.QUAD_3:
        if n < 8:
            raise OrderOutOfDomain(f"3-connected quadrangulations need n >= 8, got {n}")
        c = {2: 412, 0: 360, 1: 368}[n % 3]
        return (n**3 + 6 * n**2 - 51 * n + c) // 18
    raise TypeError(f"unsupported class {cls!r}")


def sigma_bound_general(n: int, kappa: int) -> int:
    """Transmission bound for kappa-connected graphs of order n."""
    if not 1 <= kappa <= n - 1:
        raise OrderOutOfDomain(f"need 1 <= kappa <= n-1, got kappa={kappa}, n={n}")
    q = (n - 1) // kappa
    value = Fraction((n + kappa - 1) // kappa) * (Fraction(n - 1) - Fraction(kappa, 2) * q)
    assert value.denominator == 1
    return int(value)


def remoteness_bound(cls: GraphClass, n: int) -> Rational:
    """Sharp remoteness upper bound for the class at order n."""
    if cls is GraphClass.TRI_3:
        if n < 4:
            raise OrderOutOfDomain(f"triangulations need n >= 4, got {n}")
        eps = Fraction(0) if n % 3 == 1 else Fraction(1, 3 * (n - 1))
        return Fraction(n + 2, 6) + eps
    if cls is GraphClass.TRI_4:
        if n < 6:
            raise OrderOutOfDomain(f"4-connected triangulations need n >= 6, got {n}")
        r = n % 4
        if r == 1:
            eps = Fraction(0)
        elif r == 3:
            eps = Fraction(1, 2 * (n - 1))
        else:
            eps = Fraction(3, 8 * (n - 1))
        return Fraction(n + 3, 8) + eps
    if cls is GraphClass.QUAD_2:
        if n < 4:
            raise OrderOutOfDomain(f"quadrangulations need n >= 4, got {n}")
        eps = Fraction(0) if n % 2 == 1 else Fraction(1, 4 * (n - 1))
        return Fraction(n + 1, 4) + eps
    if cls is GraphClass.TRI_5:
        if n < 12:
            raise OrderOutOfDomain(f"5-connected triangulations need n >= 12, got {n}")
        r = n % 5
        if r == 0:
            eps = Fraction(-3, 5 * (n - 1))
        elif r == 1:
            eps = Fraction(-1, n - 1)
        elif r == 2:
            eps = Fraction(2, 5 * (n - 1))
        else:
            eps = Fraction(-2, 5 * (n - 1))
        return Fraction(n + 4, 10) + eps
    if cls is GraphClass.QUAD_3:
        if n < 8:
            raise OrderOutOfDomain(f"3-connected quadrangulations need n >= 8, got {n}")
        r = n % 3
        if r == 0:
            eps = Fraction(-5, 3 * (n - 1))
        elif r == 1:
            eps = Fraction(-1, n - 1)
        else:
            eps = Fraction(1, 3 * (n - 1))
        return Fraction(n + 2, 6) + eps
    raise TypeError(f"unsupported class {cls!r}")


class LayerVariant(Enum):
    MAX = "max"
    SECOND = "second"


def layer_functional(layers) -> int:
    """F(x_0, ..., x_k) = sum of i * x_i."""
    return sum(i * x for i, x in enumerate(layers))


def optimal_layer_sequence(n: int, delta: int, variant: LayerVariant) -> Tuple[int, ...]:
    """The F-maximal (or second-maximal) layer sequence.

    Constraints: x_0 = 1, interior entries >= delta, last entry >= 1,
    sum = n.  With n - 1 = delta*q + r, 1 <= r <= delta:
    MAX    -> (1, delta, ..., delta, r)             with q deltas,
    SECOND -> (1, delta, ..., delta, delta+1, r-1)  with q-1 deltas,
    the latter defined only when r != 1.
    """
    if n < delta + 2:
        raise OrderOutOfDomain(f"need n >= delta + 2, got n={n}, delta={delta}")
    q, r = divmod(n - 1, delta)
    if r == 0:
        q, r = q - 1, delta
    if variant is LayerVariant.MAX:
        return (1,) + (delta,) * q + (r,)
    if r == 1:
        raise SecondUndefined(f"tail entry is 1 for n={n}, delta={delta}")
    return (1,) + (delta,) * (q - 1) + (delta + 1, r - 1)
