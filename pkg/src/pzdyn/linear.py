"""Linear analysis: map Jacobian, 2x2 eigenvalues, unit-circle root
location for quadratic characteristic polynomials, and fixed-point
classification by multiplier moduli.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .errors import DegenerateInput
from .model import FixedPoint, FixedPointLabel, Params, State

__all__ = [
    "HYPERBOLICITY_EPS",
    "Mat2",
    "ComplexPair",
    "RootLocation",
    "StabilityKind",
    "Classification",
    "jacobian_map",
    "quad_roots",
    "eigen2",
    "jury_classify",
    "e2_char_coeffs",
    "classify_fixed_point",
]

# band around |lambda| = 1 inside which a fixed point is reported
# nonhyperbolic; the open stability regions are decided outside it
HYPERBOLICITY_EPS = 1e-9


class Mat2(NamedTuple):
    a11: float
    a12: float
    a21: float
    a22: float


class ComplexPair(NamedTuple):
    """Eigenvalue pair; either both real (ascending) or conjugates with
    imag(lambda1) <= 0."""

    lambda1: complex
    lambda2: complex


class RootLocation(Enum):
    """Location of the roots of F(lambda) = lambda^2 + B*lambda + C
    relative to the unit circle. Cases split on the signs of F(1), F(-1)
    and on the constant term C."""

    # F(1) > 0
    BOTH_INSIDE = "both roots inside the unit circle"
    SINGLE_MINUS_ONE = "one root at -1, the other elsewhere"
    INSIDE_OUTSIDE = "one root inside, one outside"
    BOTH_OUTSIDE = "both roots outside the unit circle"
    CONJUGATE_ON_CIRCLE = "conjugate pair on the unit circle"
    DOUBLE_MINUS_ONE = "double root at -1"
    # F(1) = 0
    ROOT_AT_ONE_OTHER_INSIDE = "root at 1, other root inside"
    ROOT_AT_ONE_OTHER_ON_CIRCLE = "root at 1, other root of modulus 1"
    ROOT_AT_ONE_OTHER_OUTSIDE = "root at 1, other root outside"
    # F(1) < 0 (one real root in (1, inf))
    RIGHT_OUTSIDE_LEFT_OUTSIDE = "one root > 1, other root < -1"
    RIGHT_OUTSIDE_AT_MINUS_ONE = "one root > 1, other root at -1"
    RIGHT_OUTSIDE_OTHER_INSIDE = "one root > 1, other root in (-1, 1)"


class StabilityKind(Enum):
    ATTRACTIVE = "attractive"
    REPELLING = "repelling"
    SADDLE = "saddle"
    NONHYPERBOLIC = "nonhyperbolic"


@dataclass(frozen=True)
class Classification:
    """Stability verdict with eigenvalue evidence."""

    kind: StabilityKind
    evidence: ComplexPair
    moduli: tuple[float, float]


def jacobian_map(s: State, p: Params) -> Mat2:
    """Jacobian of the discrete map at (x, y)."""
    x, y = s
    return Mat2(2.0 - 2.0 * x - y, -x, p.gamma * y, p.gamma * x + 1.0 - p.r)


def quad_roots(B: float, C: float) -> ComplexPair:
    """Roots of lambda^2 + B*lambda + C, ordered per ComplexPair."""
    disc = B * B - 4.0 * C
    if disc >= 0.0:
        root = math.sqrt(disc)
        lo = (-B - root) / 2.0
        hi = (-B + root) / 2.0
        return ComplexPair(complex(lo, 0.0), complex(hi, 0.0))
    root = math.sqrt(-disc)
    return ComplexPair(complex(-B / 2.0, -root / 2.0), complex(-B / 2.0, root / 2.0))


def eigen2(m: Mat2) -> ComplexPair:
    """Eigenvalues of a 2x2 matrix via its characteristic polynomial."""
    tr = m.a11 + m.a22
    det = m.a11 * m.a22 - m.a12 * m.a21
    return quad_roots(-tr, det)


def jury_classify(B: float, C: float) -> RootLocation:
    """Unit-circle location of the roots of lambda^2 + B*lambda + C.

    Total over all finite (B, C); boundary (equality) cases are resolved
    before the open-region cases. Comparisons are exact, so inputs within
    float fuzz of a boundary land in the adjacent open case.
    """
    f1 = 1.0 + B + C
    fm1 = 1.0 - B + C
    if f1 > 0.0:
        if fm1 == 0.0:
            return (
                RootLocation.DOUBLE_MINUS_ONE
                if B == 2.0
                else RootLocation.SINGLE_MINUS_ONE
            )
        if C == 1.0 and fm1 > 0.0 and -2.0 < B < 2.0:
            return RootLocation.CONJUGATE_ON_CIRCLE
        if fm1 < 0.0:
            return RootLocation.INSIDE_OUTSIDE
        if C < 1.0:
            return RootLocation.BOTH_INSIDE
        return RootLocation.BOTH_OUTSIDE
    if f1 == 0.0:
        # the other root equals C
        if abs(C) < 1.0:
            return RootLocation.ROOT_AT_ONE_OTHER_INSIDE
        if abs(C) == 1.0:
            return RootLocation.ROOT_AT_ONE_OTHER_ON_CIRCLE
        return RootLocation.ROOT_AT_ONE_OTHER_OUTSIDE
    if fm1 < 0.0:
        return RootLocation.RIGHT_OUTSIDE_LEFT_OUTSIDE
    if fm1 == 0.0:
        return RootLocation.RIGHT_OUTSIDE_AT_MINUS_ONE
    return RootLocation.RIGHT_OUTSIDE_OTHER_INSIDE


def e2_char_coeffs(p: Params) -> tuple[float, float]:
    """(B, C) of the characteristic polynomial at the coexistence point:
    F(lambda) = lambda^2 - (2 - r/gamma)*lambda + (gamma-r)(1+r)/gamma."""
    return (
        -(2.0 - p.r / p.gamma),
        (p.gamma - p.r) * (1.0 + p.r) / p.gamma,
    )


_CASE_TO_KIND = {
    RootLocation.BOTH_INSIDE: StabilityKind.ATTRACTIVE,
    RootLocation.BOTH_OUTSIDE: StabilityKind.REPELLING,
    RootLocation.RIGHT_OUTSIDE_LEFT_OUTSIDE: StabilityKind.REPELLING,
    RootLocation.INSIDE_OUTSIDE: StabilityKind.SADDLE,
    RootLocation.RIGHT_OUTSIDE_OTHER_INSIDE: StabilityKind.SADDLE,
}


def _kind_from_moduli(m1: float, m2: float) -> StabilityKind:
    if (
        abs(m1 - 1.0) <= HYPERBOLICITY_EPS
        or abs(m2 - 1.0) <= HYPERBOLICITY_EPS
    ):
        return StabilityKind.NONHYPERBOLIC
    if m1 < 1.0 and m2 < 1.0:
        return StabilityKind.ATTRACTIVE
    if m1 > 1.0 and m2 > 1.0:
        return StabilityKind.REPELLING
    return StabilityKind.SADDLE


def _classify_pair(pair: ComplexPair) -> Classification:
    m1 = abs(pair.lambda1)
    m2 = abs(pair.lambda2)
    return Classification(_kind_from_moduli(m1, m2), pair, (m1, m2))


def classify_fixed_point(fp: FixedPoint, p: Params) -> Classification:
    """Stability verdict for a fixed point of the discrete map.

    E0 and E1 are classified from their explicit eigenvalues (2, 1-r) and
    (0, gamma+1-r). E2 goes through the characteristic-polynomial root
    location; any modulus within HYPERBOLICITY_EPS of 1 yields
    NONHYPERBOLIC regardless of the open-region case.
    """
    if fp.label is FixedPointLabel.E0:
        lam2 = 1.0 - p.r
        pair = ComplexPair(complex(min(2.0, lam2)), complex(max(2.0, lam2)))
        return _classify_pair(pair)
    if fp.label is FixedPointLabel.E1:
        lam2 = p.gamma + 1.0 - p.r
        pair = ComplexPair(complex(min(0.0, lam2)), complex(max(0.0, lam2)))
        return _classify_pair(pair)
    if p.gamma <= p.r:
        raise DegenerateInput(
            f"coexistence point requires gamma > r, got gamma={p.gamma}, r={p.r}"
        )
    B, C = e2_char_coeffs(p)
    case = jury_classify(B, C)
    pair = quad_roots(B, C)
    m1 = abs(pair.lambda1)
    m2 = abs(pair.lambda2)
    kind = _CASE_TO_KIND.get(case, StabilityKind.NONHYPERBOLIC)
    if abs(m1 - 1.0) <= HYPERBOLICITY_EPS or abs(m2 - 1.0) <= HYPERBOLICITY_EPS:
        kind = StabilityKind.NONHYPERBOLIC
    return Classification(kind, pair, (m1, m2))
