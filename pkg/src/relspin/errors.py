"""Exception types raised by relspin."""


class RelspinError(Exception):
    """Base class for every error raised by this package."""


class NonFiniteValue(RelspinError, ValueError):
    """A NaN or infinity reached a constructor or an intermediate result."""


class NotNormalized(RelspinError, ValueError):
    """A state vector does not have unit norm."""


class NonHermitianObservable(RelspinError, ValueError):
    """An observable failed the M == M^dagger check."""


class InternalConsistencyError(RelspinError, ArithmeticError):
    """A quantity that must be real or unitary came out otherwise."""


class SpeedOutOfRange(RelspinError, ValueError):
    """Speed outside [0, 1) in units of c."""


class EnergyOutOfRange(RelspinError, ValueError):
    """Energy factor below 1."""


class DecompositionFailure(RelspinError, ArithmeticError):
    """A Lorentz matrix did not factor into a boost times a y-rotation."""


class ConfigError(RelspinError, ValueError):
    """Invalid scan or CLI configuration."""
