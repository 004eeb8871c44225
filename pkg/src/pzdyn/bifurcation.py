"""Neimark-Sacker analysis at the coexistence fixed point.

As gamma crosses gamma0 = 1 + r (for 0 < r <= 1) the multipliers of the
coexistence point leave the unit circle as a complex-conjugate pair:

    lambda_{1,2} = (r + 2 -+ i*sqrt(3r^2 + 4r)) / (2(r + 1)),

with d|lambda|/dgamma* = xh*yh/2 > 0 at criticality (transversality) and
lambda^m != 1 for m = 1..4 (nondegeneracy). Shifting the fixed point to
the origin and applying the linear change of variables

    M = [[sqrt(3r^2+4r), -r], [0, 2(r+1)]]

brings the critical map to real normal form with quadratic parts F, G,
from which the coefficients L20, L11, L02, L21 and the discriminating
quantity

    L = -Re[(1-2*l1)*l2^2/(1-l1) * L11*L20] - |L11|^2/2 - |L02|^2
        + Re(l2*L21)

are computed (imag(l1) < 0 convention throughout). L < 0 means the
invariant closed curve born for gamma > gamma0 is attracting.

ns_coefficient also reports a one-variable closed form of L(r); the two
values come from independent printed formulas and are intentionally not
reconciled (they differ by r^3/(3r+4), traceable to a misprint in one of
the intermediate closed forms; the complex-arithmetic pipeline above is
the authoritative value).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import _kernels
from .discrete import in_M
from .errors import NotComplexRegime, OutOfRange, PreconditionViolated
from .linear import ComplexPair
from .model import State

__all__ = [
    "NSSetup",
    "NormalFormCoeffs",
    "NSReport",
    "CurveStats",
    "ns_setup",
    "perturbed_multipliers",
    "transversality",
    "nondegeneracy",
    "transformed_map",
    "normal_form_coeffs",
    "ns_coefficient",
    "closed_form_L",
    "ns_report",
    "detect_invariant_curve",
]

NONDEGENERACY_EPS = 1e-9


@dataclass(frozen=True)
class NSSetup:
    """Critical data at the bifurcation point gamma0 = 1 + r."""

    r: float
    gamma0: float
    xhat: float
    yhat: float


@dataclass(frozen=True)
class NormalFormCoeffs:
    """Second partials of the normal-form quadratic parts at the origin
    (all third partials vanish: the map is quadratic) and the complex
    combinations L20, L11, L02, L21."""

    Fxx: float
    Fxy: float
    Fyy: float
    Gxx: float
    Gxy: float
    Gyy: float
    L20: complex
    L11: complex
    L02: complex
    L21: complex


@dataclass(frozen=True)
class NSReport:
    setup: NSSetup
    multipliers: ComplexPair
    transversality: float
    nondegenerate: tuple[bool, bool, bool, bool]
    coeffs: NormalFormCoeffs
    L_pipeline: float
    L_closed_form: float


@dataclass(frozen=True)
class CurveStats:
    """Radial statistics of a post-transient orbit window about the
    perturbed coexistence point."""

    gamma_star: float
    r_min: float
    r_max: float
    r_mean: float
    closed: bool


def ns_setup(r: float) -> NSSetup:
    """Critical parameter data for 0 < r <= 1."""
    if not (math.isfinite(r) and 0.0 < r <= 1.0):
        raise OutOfRange(f"r must lie in (0, 1], got {r!r}")
    return NSSetup(r=r, gamma0=1.0 + r, xhat=r / (1.0 + r), yhat=1.0 / (1.0 + r))


def perturbed_multipliers(setup: NSSetup, gamma_star: float) -> tuple[ComplexPair, float]:
    """Multipliers and common modulus at gamma = gamma0 + gamma_star.

    The fixed-point coordinates are held at their critical values, so the
    characteristic polynomial is lambda^2 - a*lambda + b with a = 2 - xh
    constant and b = 1 - xh + xh*yh*(gamma0 + gamma_star); the modulus is
    sqrt(b) = sqrt(1 + xh*yh*gamma_star).
    """
    a = 2.0 - setup.xhat
    b = 1.0 - setup.xhat + setup.xhat * setup.yhat * (setup.gamma0 + gamma_star)
    disc = a * a - 4.0 * b
    if disc >= 0.0:
        raise NotComplexRegime(
            f"a^2 - 4b = {disc} >= 0 at gamma_star={gamma_star}; multipliers not complex"
        )
    root = math.sqrt(-disc)
    pair = ComplexPair(complex(a / 2.0, -root / 2.0), complex(a / 2.0, root / 2.0))
    return pair, math.sqrt(b)


def transversality(setup: NSSetup) -> float:
    """Growth rate of the multiplier modulus in gamma_star at criticality.

    Returns the analytic value xh*yh/2 after checking it against a central
    finite difference of the modulus (h = 1e-6, agreement 1e-6).
    """
    analytic = setup.xhat * setup.yhat / 2.0
    h = 1e-6
    _, m_plus = perturbed_multipliers(setup, h)
    _, m_minus = perturbed_multipliers(setup, -h)
    fd = (m_plus - m_minus) / (2.0 * h)
    if abs(fd - analytic) > 1e-6:
        raise AssertionError(
            f"transversality finite difference {fd} deviates from analytic {analytic}"
        )
    return analytic


def nondegeneracy(setup: NSSetup) -> tuple[bool, bool, bool, bool]:
    """Whether lambda1^m stays away from 1 for m = 1..4."""
    lam1 = perturbed_multipliers(setup, 0.0)[0].lambda1
    out = []
    z = 1.0 + 0.0j
    for _ in range(4):
        z *= lam1
        out.append(abs(z - 1.0) > NONDEGENERACY_EPS)
    return tuple(out)


def _critical_scale(r: float) -> float:
    return math.sqrt(3.0 * r * r + 4.0 * r)


def transformed_map(setup: NSSetup) -> Callable[[float, float], tuple[float, float]]:
    """The critical map conjugated into normal-form coordinates (X, Y).

    Built by an explicit change of variables (u, v) = M(X, Y) around the
    shifted critical map, not from the closed-form quadratic parts, so
    finite differences of this callable provide an independent route to
    the normal-form partials.
    """
    r = setup.r
    s = _critical_scale(r)
    xh = setup.xhat
    yh = setup.yhat
    g0 = setup.gamma0
    # inverse of M = [[s, -r], [0, 2(r+1)]]
    i11 = 1.0 / s
    i12 = r / (2.0 * (r + 1.0) * s)
    i22 = 1.0 / (2.0 * (r + 1.0))

    def T(X: float, Y: float) -> tuple[float, float]:
        u = s * X - r * Y
        v = 2.0 * (r + 1.0) * Y
        u1 = (1.0 - xh) * u - xh * v - u * u - u * v
        v1 = g0 * yh * u + v + g0 * u * v
        return i11 * u1 + i12 * v1, i22 * v1

    return T


def normal_form_coeffs(setup: NSSetup) -> NormalFormCoeffs:
    """Closed-form normal-form partials and the L_jk combinations."""
    r = setup.r
    s = _critical_scale(r)
    Fxx = -2.0 * s
    Fxy = r * r + r - 2.0
    Fyy = (4.0 * r - 2.0 * r**3) / s
    Gxx = 0.0
    Gxy = (r + 1.0) * s
    Gyy = -2.0 * r * (r + 1.0)
    L20 = complex(Fxx - Fyy + 2.0 * Gxy, Gxx - Gyy - 2.0 * Fxy) / 8.0
    L11 = complex(Fxx + Fyy, Gxx + Gyy) / 4.0
    L02 = complex(Fxx - Fyy - 2.0 * Gxy, Gxx - Gyy + 2.0 * Fxy) / 8.0
    L21 = 0.0j  # all third partials vanish for a quadratic map
    return NormalFormCoeffs(Fxx, Fxy, Fyy, Gxx, Gxy, Gyy, L20, L11, L02, L21)


def closed_form_L(r: float) -> float:
    """One-variable closed form of the discriminating quantity,
    -(6r^6+32r^5+64r^4+60r^3+36r^2+19r+4) / (2(r+1)(3r+4))."""
    num = ((((((6.0 * r + 32.0) * r + 64.0) * r + 60.0) * r + 36.0) * r + 19.0) * r + 4.0)
    return -num / (2.0 * (r + 1.0) * (3.0 * r + 4.0))


def ns_coefficient(setup: NSSetup) -> tuple[float, float]:
    """(L_pipeline, L_closed_form), not reconciled.

    L_pipeline evaluates the discriminating-quantity formula by complex
    arithmetic from the critical multipliers and the L_jk coefficients;
    L_closed_form evaluates the printed one-variable polynomial form.
    """
    pair, _ = perturbed_multipliers(setup, 0.0)
    l1, l2 = pair.lambda1, pair.lambda2
    c = normal_form_coeffs(setup)
    term = (1.0 - 2.0 * l1) * l2 * l2 / (1.0 - l1)
    pipeline = (
        -(term * c.L11 * c.L20).real
        - 0.5 * abs(c.L11) ** 2
        - abs(c.L02) ** 2
        + (l2 * c.L21).real
    )
    return pipeline, closed_form_L(setup.r)


def ns_report(setup: NSSetup) -> NSReport:
    """Full diagnostic bundle at the critical parameter."""
    pair, _ = perturbed_multipliers(setup, 0.0)
    lp, lcf = ns_coefficient(setup)
    return NSReport(
        setup=setup,
        multipliers=pair,
        transversality=transversality(setup),
        nondegenerate=nondegeneracy(setup),
        coeffs=normal_form_coeffs(setup),
        L_pipeline=lp,
        L_closed_form=lcf,
    )


# closed-curve heuristics: the orbit must keep a nonzero radius, stay in a
# moderate radial band, wind at least once around the center, and hold a
# stationary mean radius between two consecutive windows (a slowly decaying
# spiral at criticality passes the first three but not the last)
_BAND_RATIO = 10.0
_RADIUS_FLOOR_FACTOR = 10.0
_STATIONARITY_RTOL = 0.02


def detect_invariant_curve(
    setup: NSSetup,
    gamma_star: float,
    seed: State,
    transient: int = 5000,
    window: int = 1000,
    tol: float = 1e-8,
) -> CurveStats:
    """Empirical invariant-curve detection at gamma = gamma0 + gamma_star.

    Iterates the map from `seed`, discards `transient` steps, then records
    two consecutive windows of `window` states. Radial statistics are
    taken about the perturbed coexistence point (r/gamma, (gamma-r)/gamma)
    over the second window; `closed` requires r_min > 10*tol, a radial
    band narrower than a factor of 10, angular coverage beyond a full
    turn, and window-to-window mean-radius agreement within 2%.
    """
    if window < 2:
        raise ValueError(f"window must be at least 2, got {window}")
    if transient < 0:
        raise ValueError(f"transient must be nonnegative, got {transient}")
    g = setup.gamma0 + gamma_star
    if g <= setup.r:
        raise PreconditionViolated(
            f"perturbed gamma = {g} must exceed r = {setup.r} for a coexistence point"
        )
    if not in_M(seed).inside:
        raise PreconditionViolated(f"seed {seed} must lie in the trapping triangle M")

    cx = setup.r / g
    cy = (g - setup.r) / g
    xs1, ys1 = _kernels.map_window(seed[0], seed[1], setup.r, g, transient, window)
    xs2, ys2 = _kernels.map_window(xs1[-1], ys1[-1], setup.r, g, 0, window)

    rad1 = np.hypot(xs1 - cx, ys1 - cy)
    rad2 = np.hypot(xs2 - cx, ys2 - cy)
    r_min = float(rad2.min())
    r_max = float(rad2.max())
    r_mean = float(rad2.mean())

    closed = r_min > _RADIUS_FLOOR_FACTOR * tol and r_max < _BAND_RATIO * r_min
    if closed:
        theta = np.unwrap(np.arctan2(ys2 - cy, xs2 - cx))
        closed = float(np.abs(np.diff(theta)).sum()) > 2.0 * math.pi
    if closed:
        mean1 = float(rad1.mean())
        closed = mean1 > 0.0 and abs(r_mean / mean1 - 1.0) <= _STATIONARITY_RTOL
    return CurveStats(gamma_star, r_min, r_max, r_mean, closed)
