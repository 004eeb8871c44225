"""Continuous-time side: fixed-step RK4 integration and grid verification
of the two global-stability Lyapunov certificates.

In the regime 0 < gamma <= r the prey-only equilibrium (1, 0) is globally
asymptotically stable, certified by

    L1(x, y) = x - ln x + y/gamma - 1,
    dL1/dt   = -(1-x)^2 + y*(1 - r/gamma) <= 0.

For gamma > r the coexistence equilibrium (xh, yh) = (r/gamma, 1 - r/gamma)
takes over, certified by L2 = H(xh, yh) - H(x, y) with

    H(x, y)  = xh*ln x - x + (yh*ln y - y)/gamma,
    dL2/dt   = -(x - xh)^2 <= 0.

verify_lyapunov samples both certificates on a grid: positivity away from
the equilibrium, nonpositive derivative along the flow, and agreement of
the analytic derivative with a finite-difference directional derivative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import DomainError, PreconditionViolated
from .model import Params, State, vector_field

__all__ = [
    "Trajectory",
    "LyapunovReport",
    "integrate",
    "lyap1_value",
    "lyap1_dot",
    "lyap2_value",
    "lyap2_dot",
    "verify_lyapunov",
    "check_radial_growth",
]

# coordinates below -QUADRANT_EPS set the out-of-quadrant flag
QUADRANT_EPS = 1e-12


@dataclass(frozen=True)
class Trajectory:
    """Sampled solution of the flow; times strictly increasing."""

    times: np.ndarray
    xs: np.ndarray
    ys: np.ndarray
    out_of_quadrant: bool

    def __len__(self):
        return self.times.size

    def state(self, k: int) -> State:
        return State(self.xs[k], self.ys[k])

    @property
    def final(self) -> State:
        return State(self.xs[-1], self.ys[-1])


@dataclass(frozen=True)
class LyapunovReport:
    grid_points: int
    max_violation: float
    monotone_fraction: float
    fd_max_error: float

    @property
    def passed(self) -> bool:
        return self.max_violation < 1e-12 and self.monotone_fraction == 1.0


def integrate(s0: State, p: Params, t_end: float, dt: float = 1e-3) -> Trajectory:
    """Classical 4th-order fixed-step integration of the flow.

    States are recorded every step; the final step is shortened to land
    exactly on t_end. Leaving the closed positive quadrant (beyond
    QUADRANT_EPS) sets a non-fatal flag on the trajectory.
    """
    if not t_end > 0.0:
        raise PreconditionViolated(f"t_end must be positive, got {t_end}")
    if not 0.0 < dt <= t_end:
        raise PreconditionViolated(f"dt must satisfy 0 < dt <= t_end, got {dt}")
    if s0[0] < 0.0 or s0[1] < 0.0:
        raise PreconditionViolated(f"s0 must lie in the closed positive quadrant, got {s0}")
    ts, xs, ys = _kernels.rk4_orbit(s0[0], s0[1], p.r, p.gamma, t_end, dt)
    escaped = bool(xs.min() < -QUADRANT_EPS or ys.min() < -QUADRANT_EPS)
    return Trajectory(ts, xs, ys, escaped)


def lyap1_value(s: State, p: Params) -> float:
    """Prey-only certificate L1; zero at (1, 0), positive elsewhere."""
    x, y = s
    if x <= 0.0:
        raise DomainError(f"L1 requires x > 0, got x={x}")
    return x - math.log(x) + y / p.gamma - 1.0


def lyap1_dot(s: State, p: Params) -> float:
    """Derivative of L1 along the flow (simplified closed form)."""
    x, y = s
    if x <= 0.0:
        raise DomainError(f"L1 requires x > 0, got x={x}")
    return -(1.0 - x) ** 2 + y * (1.0 - p.r / p.gamma)


def _coexistence(p: Params) -> tuple[float, float]:
    return p.r / p.gamma, 1.0 - p.r / p.gamma


def lyap2_value(s: State, p: Params) -> float:
    """Coexistence certificate L2 = H(xh, yh) - H(x, y); needs gamma > r."""
    x, y = s
    if p.gamma <= p.r:
        raise DomainError(f"L2 requires gamma > r, got gamma={p.gamma}, r={p.r}")
    if x <= 0.0 or y <= 0.0:
        raise DomainError(f"L2 requires x > 0 and y > 0, got {s}")
    xh, yh = _coexistence(p)

    def H(a, b):
        return xh * math.log(a) - a + (yh * math.log(b) - b) / p.gamma

    return H(xh, yh) - H(x, y)


def lyap2_dot(s: State, p: Params) -> float:
    """Derivative of L2 along the flow, -(x - xh)^2."""
    x, y = s
    if p.gamma <= p.r:
        raise DomainError(f"L2 requires gamma > r, got gamma={p.gamma}, r={p.r}")
    if x <= 0.0 or y <= 0.0:
        raise DomainError(f"L2 requires x > 0 and y > 0, got {s}")
    xh = p.r / p.gamma
    return -((x - xh) ** 2)


# equilibrium-exclusion radius: the certificate vanishes at the target
# equilibrium itself, so strict positivity is only claimed outside it
_EXCLUSION_RADIUS = 1e-6
_FD_STEP = 1e-5


def verify_lyapunov(p: Params, which: str, grid: int = 100) -> LyapunovReport:
    """Grid verification of a Lyapunov certificate over (0, 2] x (0, 2].

    which = "thm1" verifies L1 (regime 0 < gamma <= r, target (1, 0));
    which = "thm2" verifies L2 (regime gamma > r, target coexistence).
    Checks value > 0 and dot <= 1e-12 at every sample, and compares the
    analytic dot with a centered finite difference of the certificate
    along the flow direction.
    """
    if which == "thm1":
        if not p.gamma <= p.r:
            raise PreconditionViolated(
                f"thm1 requires 0 < gamma <= r, got gamma={p.gamma}, r={p.r}"
            )
        value, dot, target = lyap1_value, lyap1_dot, (1.0, 0.0)
    elif which == "thm2":
        if not p.gamma > p.r:
            raise PreconditionViolated(
                f"thm2 requires gamma > r, got gamma={p.gamma}, r={p.r}"
            )
        value, dot, target = lyap2_value, lyap2_dot, _coexistence(p)
    else:
        raise ValueError(f"which must be 'thm1' or 'thm2', got {which!r}")

    h = _FD_STEP
    count = 0
    max_violation = 0.0
    monotone = 0
    fd_max_error = 0.0
    for i in range(1, grid + 1):
        x = 2.0 * i / grid
        for j in range(1, grid + 1):
            y = 2.0 * j / grid
            if math.hypot(x - target[0], y - target[1]) < _EXCLUSION_RADIUS:
                continue
            s = State(x, y)
            count += 1
            v = value(s, p)
            d = dot(s, p)
            max_violation = max(max_violation, -v, d)
            if d <= 1e-12:
                monotone += 1
            fx, fy = vector_field(s, p)
            ahead = State(x + h * fx, y + h * fy)
            behind = State(x - h * fx, y - h * fy)
            fd = (value(ahead, p) - value(behind, p)) / (2.0 * h)
            fd_max_error = max(fd_max_error, abs(fd - d))
    return LyapunovReport(
        grid_points=count,
        max_violation=max(0.0, max_violation),
        monotone_fraction=monotone / count if count else 1.0,
        fd_max_error=fd_max_error,
    )


def check_radial_growth(
    p: Params, which: str, radii=(10.0, 100.0, 1000.0), directions: int = 8
) -> bool:
    """Radial unboundedness probe: certificate values grow monotonically
    along rays from the target equilibrium at the given radii."""
    if which == "thm1":
        value, target = lyap1_value, (1.0, 0.0)
    elif which == "thm2":
        value, target = lyap2_value, _coexistence(p)
    else:
        raise ValueError(f"which must be 'thm1' or 'thm2', got {which!r}")
    for k in range(directions):
        phi = (k + 0.5) * (math.pi / 2.0) / directions
        dx, dy = math.cos(phi), math.sin(phi)
        values = [
            value(State(target[0] + rho * dx, target[1] + rho * dy), p)
            for rho in radii
        ]
        if not all(a < b for a, b in zip(values, values[1:])):
            return False
    return True
