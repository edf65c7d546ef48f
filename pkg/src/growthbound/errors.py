"""Semantic exception hierarchy for the growthbound package."""


class GrowthBoundError(Exception):
    """Base class for all package errors."""


class DomainError(GrowthBoundError, ValueError):
    """Argument outside the domain of a function."""


class ArgumentError(GrowthBoundError, ValueError):
    """Structurally invalid argument (wrong range, wrong kind)."""


class OutsideRegion(GrowthBoundError):
    """Query point lies outside the region."""


class InsufficientScales(GrowthBoundError):
    """Too few scale pairs for a dimension estimate."""


class ChartViolation(GrowthBoundError):
    """Declared Lipschitz chart contradicted by the data.

    Carries the offending anchor and sample pair when available.
    """

    def __init__(self, message, anchor=None, pair=None):
        super().__init__(message)
        self.anchor = anchor
        self.pair = pair


class ChartError(GrowthBoundError, ValueError):
    """Chart parameters violate the standing assumptions (L >= 2, R < 2*alpha)."""


class InvalidProfile(GrowthBoundError):
    """Profile function fails a structural probe (concavity, differentiability)."""


class DivergentTail(GrowthBoundError):
    """Tail integral fails the integrability probe."""


class DivergentIntegral(GrowthBoundError):
    """Endpoint integral fails the integrability probe."""


class UpgradeUnavailable(GrowthBoundError):
    """No (v, tau1) pair validates the single-term upgrade."""


class LimitDiverges(GrowthBoundError):
    """The t * (mu_inv)'(t) probe diverges; power-type closed form unavailable."""


class CalibrationFailed(GrowthBoundError):
    """Kernel calibration failed even at the minimum weight."""


class BarrierViolation(GrowthBoundError):
    """Barrier comparison inequality violated at a sample point."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NoConvergence(GrowthBoundError):
    """Iteration exceeded max_iters without reaching tolerance."""


class ConfigError(GrowthBoundError, ValueError):
    """Scenario configuration failed schema or semantic validation."""
