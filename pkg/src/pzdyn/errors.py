"""Exception types shared across the package."""


class PZDynError(Exception):
    """Base class for all package-specific errors."""


class InvalidRaw(PZDynError, ValueError):
    """A dimensional parameter is missing, non-finite, or not positive."""


class InvalidParams(PZDynError, ValueError):
    """A nondimensional parameter pair violates r > 0, gamma > 0."""


class NonPositiveGamma(PZDynError, ValueError):
    """beta <= theta, so the net conversion gamma would not be positive."""


class DegenerateInput(PZDynError, ValueError):
    """A coexistence fixed point was supplied outside its existence range."""


class DomainError(PZDynError, ValueError):
    """A state lies outside the domain of a Lyapunov/LaSalle function."""


class PreconditionViolated(PZDynError, ValueError):
    """Arguments fall outside an operation's stated parameter regime."""


class OutOfRange(PZDynError, ValueError):
    """A bifurcation parameter lies outside the admissible interval."""


class NotComplexRegime(PZDynError, ValueError):
    """The perturbation is too large for a complex multiplier pair."""
