"""Discrete-map side: orbit iteration, invariant-region predicates, the
parameter region governing invariance of the triangle M, LaSalle difference
certificates, restricted one-dimensional dynamics, and convergence
detection.

Invariant sets of the map:

    X = {0 <= x <= 2, y = 0}         (prey axis segment)
    Y = {x = 0, y >= 0}              (predator axis; needs r <= 1)
    M = {0 <= x <= 1, 0 <= y <= 2-x} (trapping triangle)

M is invariant when 0 < r <= 1 and either gamma <= r or (r, gamma) lies in
the parameter region S, bounded by gamma = (1 -+ sqrt(r))^2 / 2. Inside M,
LaSalle difference functions certify global convergence to the prey-only
point (gamma <= r) or to the coexistence point ((r, gamma) in S).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import DomainError, PreconditionViolated
from .model import Params, State, apply_map

__all__ = [
    "Orbit",
    "RegionVerdict",
    "GridCheckReport",
    "XDynamicsReport",
    "iterate",
    "in_X",
    "in_Y",
    "in_M",
    "in_param_set_S",
    "s_gamma_bounds",
    "lasalle_L1",
    "delta_L1",
    "lasalle_L2",
    "delta_L2",
    "restricted_X_analysis",
    "converge_detect",
    "verify_m_invariance",
    "verify_lasalle1",
    "verify_lasalle2",
]

R_CORNER = 3.0 - 2.0 * math.sqrt(2.0)  # where the lower S boundary meets gamma = r


@dataclass(frozen=True)
class Orbit:
    """Dense orbit of the map; states[k+1] = apply_map(states[k], params)
    bit-exactly."""

    xs: np.ndarray
    ys: np.ndarray
    params: Params

    def __len__(self):
        return self.xs.size

    def state(self, k: int) -> State:
        return State(self.xs[k], self.ys[k])

    @property
    def final(self) -> State:
        return State(self.xs[-1], self.ys[-1])

    @property
    def escaped(self) -> bool:
        """True if any state left the closed positive quadrant."""
        return bool(self.xs.min() < 0.0 or self.ys.min() < 0.0)


@dataclass(frozen=True)
class RegionVerdict:
    inside: bool
    binding_constraint: str | None = None
    invariance_ok: bool | None = None


@dataclass(frozen=True)
class GridCheckReport:
    grid_points: int
    max_violation: float

    def passed(self, tol: float = 1e-12) -> bool:
        return self.max_violation <= tol


def iterate(s0: State, p: Params, n: int) -> Orbit:
    """Orbit of length n+1 starting at s0. Escape from the positive
    quadrant is recorded on the orbit, not raised."""
    if n < 0:
        raise ValueError(f"step count must be nonnegative, got {n}")
    xs, ys = _kernels.map_orbit(s0[0], s0[1], p.r, p.gamma, n)
    return Orbit(xs, ys, p)


def in_X(s: State, tol: float = 0.0) -> RegionVerdict:
    """Membership in the prey-axis segment X = {0 <= x <= 2, y = 0}."""
    x, y = s
    if x < -tol:
        return RegionVerdict(False, "0<=x")
    if x > 2.0 + tol:
        return RegionVerdict(False, "x<=2")
    if abs(y) > tol:
        return RegionVerdict(False, "y==0")
    return RegionVerdict(True)


def in_Y(s: State, p: Params, tol: float = 0.0) -> RegionVerdict:
    """Membership in the predator axis Y = {x = 0, y >= 0}.

    The verdict also reports whether r <= 1 holds, the condition for Y to
    be forward-invariant.
    """
    x, y = s
    ok = p.r <= 1.0
    if abs(x) > tol:
        return RegionVerdict(False, "x==0", ok)
    if y < -tol:
        return RegionVerdict(False, "0<=y", ok)
    return RegionVerdict(True, None, ok)


def in_M(s: State, tol: float = 0.0) -> RegionVerdict:
    """Membership in the trapping triangle M = {0<=x<=1, 0<=y<=2-x}."""
    x, y = s
    if x < -tol:
        return RegionVerdict(False, "0<=x")
    if x > 1.0 + tol:
        return RegionVerdict(False, "x<=1")
    if y < -tol:
        return RegionVerdict(False, "0<=y")
    if y > 2.0 - x + tol:
        return RegionVerdict(False, "y<=2-x")
    return RegionVerdict(True)


def s_gamma_bounds(r: float) -> tuple[float, float]:
    """Gamma band [(1-sqrt(r))^2/2, (1+sqrt(r))^2/2] of the region S."""
    sq = math.sqrt(r)
    return (1.0 - sq) ** 2 / 2.0, (1.0 + sq) ** 2 / 2.0


def _s_discriminant(r: float, g: float) -> float:
    # nonpositive iff the boundary curves y = 2-x and the image constraint
    # do not intersect, i.e. gamma lies in the s_gamma_bounds band
    return 4.0 * g * g - 4.0 * g * r - 4.0 * g + (r - 1.0) ** 2


def in_param_set_S(p: Params) -> RegionVerdict:
    """Membership in the parameter region S = S1 u S2.

    S1: 0 < r <= 3 - 2*sqrt(2) with gamma in the full band
    [(1-sqrt(r))^2/2, (1+sqrt(r))^2/2]; S2: 3 - 2*sqrt(2) < r < 1 with
    r < gamma <= (1+sqrt(r))^2/2. Cross-checked against the equivalent
    discriminant form 4g^2 - 4gr - 4g + (r-1)^2 <= 0 with gamma > r (and
    r < 1); points within 1e-9 of the discriminant boundary skip the
    cross-check since the two float evaluations can disagree there.
    """
    r, g = p.r, p.gamma
    lo, hi = s_gamma_bounds(r)
    if r <= R_CORNER:
        inside = lo <= g <= hi
        binding = None if inside else ("gamma>=(1-sqrt(r))^2/2" if g < lo else "gamma<=(1+sqrt(r))^2/2")
    elif r < 1.0:
        inside = r < g <= hi
        binding = None if inside else ("gamma>r" if g <= r else "gamma<=(1+sqrt(r))^2/2")
    else:
        inside = False
        binding = "r<1"
    disc = _s_discriminant(r, g)
    if abs(disc) > 1e-9:
        alt = (r < 1.0) and (g > r) and (disc <= 0.0)
        if alt != inside:
            raise RuntimeError(
                f"S-region characterizations disagree at (r={r}, gamma={g}): "
                f"band form {inside}, discriminant form {alt}"
            )
    return RegionVerdict(inside, binding)


def _l1_constant(p: Params, c: float | None) -> float:
    if p.gamma >= p.r:
        raise PreconditionViolated(
            f"LaSalle L1 requires gamma < r, got gamma={p.gamma}, r={p.r}"
        )
    c_min = 1.0 / (p.r - p.gamma)
    if c is None:
        return c_min
    # relative slack so a constant equal to 1/(r-gamma) up to rounding passes
    if c < c_min * (1.0 - 1e-12):
        raise PreconditionViolated(f"c must be >= 1/(r-gamma) = {c_min}, got {c}")
    return c


def lasalle_L1(s: State, p: Params, c: float | None = None) -> float:
    """LaSalle certificate L = 1 - x + c*y for the prey-only regime.

    Defaults to the minimal admissible constant c = 1/(r-gamma); requires
    gamma < r strictly (at gamma = r use the direct predator-monotonicity
    check in verify_lasalle1).
    """
    c = _l1_constant(p, c)
    x, y = s
    return 1.0 - x + c * y


def delta_L1(s: State, p: Params, c: float | None = None) -> float:
    """One-step difference of L1 in closed form:
    x(x-1) + y(c*gamma*x + x - c*r), nonpositive on M."""
    c = _l1_constant(p, c)
    x, y = s
    return x * (x - 1.0) + y * (c * p.gamma * x + x - c * p.r)


def lasalle_L2(s: State, p: Params) -> float:
    """Piecewise LaSalle certificate for the coexistence regime:
    ln y left of x = r/gamma, -ln y to the right."""
    x, y = s
    if y <= 0.0:
        raise DomainError(f"L2 requires y > 0, got y={y}")
    return math.log(y) if x <= p.r / p.gamma else -math.log(y)


def delta_L2(s: State, p: Params) -> float:
    """One-step difference of the piecewise certificate in closed form:
    +-ln(gamma*x + 1 - r) by the branch of x.

    Matches the definitional difference only while the orbit stays on one
    branch of the piecewise certificate; it is the branch-local decrement
    and is nonpositive on M either way.
    """
    x, y = s
    if y <= 0.0:
        raise DomainError(f"L2 requires y > 0, got y={y}")
    w = p.gamma * x + 1.0 - p.r
    if w <= 0.0:
        raise DomainError(f"log argument gamma*x+1-r = {w} must be positive")
    return math.log(w) if x <= p.r / p.gamma else -math.log(w)


@dataclass(frozen=True)
class XDynamicsReport:
    """Dynamics of the prey-axis restriction f(x) = x(2-x) on [0, 2]."""

    fixed_points: tuple[float, float]
    slope_at_zero: float
    slope_at_one: float
    period2_discriminant: float
    has_period_two: bool
    seeds_tested: int
    max_limit_error: float
    all_converged: bool


def restricted_X_analysis(seeds: int = 100, steps: int = 1000) -> XDynamicsReport:
    """Analyze the map restricted to the invariant prey axis.

    f(x) = x(2-x) has fixed points 0 (repelling, f'(0) = 2) and 1
    (superattracting, f'(1) = 0). Period-2 points would solve
    x^2 - 3x + 3 = 0, whose discriminant is negative, so none exist;
    iteration from seeds across (0, 2) confirms convergence to 1.
    """
    disc = 3.0 * 3.0 - 4.0 * 3.0  # of x^2 - 3x + 3
    worst = 0.0
    for i in range(1, seeds + 1):
        x = 2.0 * i / (seeds + 1)
        for _ in range(steps):
            x = x * (2.0 - x)
        worst = max(worst, abs(x - 1.0))
    return XDynamicsReport(
        fixed_points=(0.0, 1.0),
        slope_at_zero=2.0,
        slope_at_one=0.0,
        period2_discriminant=disc,
        has_period_two=disc >= 0.0,
        seeds_tested=seeds,
        max_limit_error=worst,
        all_converged=worst < 1e-9,
    )


def converge_detect(o: Orbit, tol: float = 1e-8, window: int = 50) -> State | None:
    """Mean of the last `window` states if they all lie within `tol` of
    each other (pairwise), else None.

    Works without knowing the limit, so circulating orbits (e.g. on an
    invariant curve) correctly report no convergence.
    """
    if window < 2:
        raise ValueError(f"window must be at least 2, got {window}")
    if tol <= 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    if len(o) < window:
        return None
    xs = o.xs[-window:]
    ys = o.ys[-window:]
    dx = xs[:, None] - xs[None, :]
    dy = ys[:, None] - ys[None, :]
    if np.max(dx * dx + dy * dy) >= tol * tol:
        return None
    return State(float(xs.mean()), float(ys.mean()))


def _m_admissible(p: Params) -> bool:
    return 0.0 < p.r <= 1.0 and (p.gamma <= p.r or in_param_set_S(p).inside)


def _m_grid(grid: int) -> tuple[np.ndarray, np.ndarray]:
    # boundary included: invariance must hold on the edges of M too
    xs = np.linspace(0.0, 1.0, grid)
    X, U = np.meshgrid(xs, np.linspace(0.0, 1.0, grid), indexing="ij")
    return X.ravel(), (U * (2.0 - X)).ravel()


def verify_m_invariance(p: Params, grid: int = 50) -> GridCheckReport:
    """Check that the map sends a grid over M back into M.

    Requires 0 < r <= 1 and (gamma <= r or (r, gamma) in S); the reported
    violation is the worst excess over the four inequalities defining M.
    """
    if not _m_admissible(p):
        raise PreconditionViolated(
            f"M-invariance requires 0 < r <= 1 and gamma <= r or (r, gamma) in S, "
            f"got r={p.r}, gamma={p.gamma}"
        )
    x, y = _m_grid(grid)
    xn = x * (2.0 - x - y)
    yn = y * (p.gamma * x + 1.0 - p.r)
    excess = np.maximum.reduce([-xn, xn - 1.0, -yn, yn - (2.0 - xn)])
    return GridCheckReport(x.size, max(0.0, float(excess.max())))


def verify_lasalle1(p: Params, grid: int = 100) -> GridCheckReport:
    """Grid check of the prey-only LaSalle certificate on M.

    For gamma < r the closed-form difference delta_L1 (minimal c) must be
    nonpositive; on the boundary gamma = r, where no admissible constant
    exists, the predator density itself must be non-increasing.
    """
    if not (0.0 < p.r <= 1.0 and p.gamma <= p.r):
        raise PreconditionViolated(
            f"LaSalle-1 regime is 0 < r <= 1, gamma <= r; got r={p.r}, gamma={p.gamma}"
        )
    x, y = _m_grid(grid)
    if p.gamma < p.r:
        c = 1.0 / (p.r - p.gamma)
        vals = x * (x - 1.0) + y * (c * p.gamma * x + x - c * p.r)
    else:
        vals = y * (p.gamma * x + 1.0 - p.r) - y
    return GridCheckReport(x.size, max(0.0, float(vals.max())))


def verify_lasalle2(p: Params, grid: int = 100) -> GridCheckReport:
    """Grid check of the piecewise coexistence certificate on M: the
    closed-form difference delta_L2 is nonpositive at every sample with
    y > 0. Requires (r, gamma) in S."""
    if not in_param_set_S(p).inside:
        raise PreconditionViolated(
            f"LaSalle-2 requires (r, gamma) in S, got r={p.r}, gamma={p.gamma}"
        )
    xs = np.linspace(0.0, 1.0, grid)
    worst = -math.inf
    count = 0
    for x in xs:
        w = p.gamma * x + 1.0 - p.r
        d = math.log(w) if x <= p.r / p.gamma else -math.log(w)
        # delta_L2 is independent of y; one sample per x with y > 0
        worst = max(worst, d)
        count += grid
    return GridCheckReport(count, max(0.0, worst))
