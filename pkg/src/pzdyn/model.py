"""Model core: parameter/state types, dimensional reduction, vector field,
quadratic map, and fixed-point enumeration.

The model couples a logistically growing prey density x with a predator
density y through linear functional responses. After rescaling time by the
prey growth rate and densities by the carrying capacity, the dynamics are
governed by the nondimensional pair (r, gamma):

    continuous flow:   dx/dt = x(1-x) - xy,   dy/dt = gamma*x*y - r*y
    discrete map:      x' = x(2-x) - xy,      y' = gamma*x*y + (1-r)*y

Equilibria of the flow coincide with fixed points of the map: the origin
E0, prey-only E1 = (1, 0), and (for gamma > r) coexistence
E2 = (r/gamma, (gamma-r)/gamma).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .errors import InvalidParams, InvalidRaw, NonPositiveGamma

__all__ = [
    "RawParams",
    "Params",
    "State",
    "FixedPointLabel",
    "FixedPoint",
    "nondimensionalize",
    "nondimensionalize_state",
    "vector_field",
    "apply_map",
    "fixed_points",
]


class State(NamedTuple):
    """Point (x, y) in the phase plane."""

    x: float
    y: float


@dataclass(frozen=True)
class RawParams:
    """Dimensional model parameters; all fields strictly positive."""

    b: float  # prey intrinsic growth rate (1/time)
    k: float  # carrying capacity (biomass)
    alpha: float  # consumption rate
    beta: float  # conversion efficiency
    r_mort: float  # predator mortality (1/time)
    theta: float  # toxin release rate

    def __post_init__(self):
        for name in ("b", "k", "alpha", "beta", "r_mort"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise InvalidRaw(f"{name} must be finite and positive, got {v!r}")
        # theta = 0 is the meaningful toxin-free limit
        if not (math.isfinite(self.theta) and self.theta >= 0):
            raise InvalidRaw(f"theta must be finite and nonnegative, got {self.theta!r}")


@dataclass(frozen=True)
class Params:
    """Nondimensional parameter pair; r > 0 and gamma > 0."""

    r: float
    gamma: float

    def __post_init__(self):
        if not (math.isfinite(self.r) and self.r > 0):
            raise InvalidParams(f"r must be finite and positive, got {self.r!r}")
        if not (math.isfinite(self.gamma) and self.gamma > 0):
            raise InvalidParams(f"gamma must be finite and positive, got {self.gamma!r}")


class FixedPointLabel(Enum):
    E0 = "E0"
    E1 = "E1"
    E2 = "E2"


class FixedPoint(NamedTuple):
    label: FixedPointLabel
    state: State


def nondimensionalize(raw: RawParams) -> Params:
    """Collapse the six dimensional parameters to the pair (r, gamma).

    Rescaling time by b and prey density by k gives r = r_mort/b and
    gamma = (beta - theta)*k/b. Requires beta > theta, otherwise the net
    conversion gamma would not be positive.
    """
    if not isinstance(raw, RawParams):
        raw = RawParams(*raw)
    if raw.beta <= raw.theta:
        raise NonPositiveGamma(
            f"beta={raw.beta} must exceed theta={raw.theta} for positive gamma"
        )
    return Params(raw.r_mort / raw.b, (raw.beta - raw.theta) * raw.k / raw.b)


def nondimensionalize_state(raw: RawParams, prey: float, predator: float) -> State:
    """Rescale dimensional densities (prey, predator) to the (x, y) plane.

    The consumption rate alpha enters only here; it cancels from the
    nondimensional parameters.
    """
    return State(prey / raw.k, raw.alpha * predator / raw.b)


def vector_field(s: State, p: Params) -> tuple[float, float]:
    """Right-hand side (dx/dt, dy/dt) of the continuous flow."""
    x, y = s
    return x * (1.0 - x) - x * y, p.gamma * x * y - p.r * y


def apply_map(s: State, p: Params) -> State:
    """One step of the discrete map.

    Out-of-quadrant outputs are returned as-is; region predicates in
    pzdyn.discrete are responsible for flagging escape.
    """
    x, y = s
    return State(x * (2.0 - x - y), y * (p.gamma * x + 1.0 - p.r))


def fixed_points(p: Params) -> list[FixedPoint]:
    """All nonnegative fixed points, [E0, E1] plus E2 when gamma > r.

    At gamma = r the coexistence point degenerates onto E1 and is
    suppressed to avoid a duplicate entry.
    """
    pts = [
        FixedPoint(FixedPointLabel.E0, State(0.0, 0.0)),
        FixedPoint(FixedPointLabel.E1, State(1.0, 0.0)),
    ]
    if p.gamma > p.r:
        pts.append(
            FixedPoint(
                FixedPointLabel.E2,
                State(p.r / p.gamma, (p.gamma - p.r) / p.gamma),
            )
        )
    return pts
