"""Boost and particle rapidities and the Wigner angle between them.

Geometry is fixed: the observer's boost is along x and the particle momentum
along z, so the two boosts are perpendicular. Speeds are in units of c.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DecompositionFailure, EnergyOutOfRange, NonFiniteValue, SpeedOutOfRange

#: Stand-in for beta -> 1; hyperbolic functions overflow at beta == 1 itself.
LIMIT_BETA = 1.0 - 1e-9


@dataclass(frozen=True)
class BoostParameters:
    """Frame boost along x: speed ``beta`` and rapidity ``alpha``."""

    beta: float
    alpha: float

    def __post_init__(self):
        if not (math.isfinite(self.beta) and math.isfinite(self.alpha)):
            raise NonFiniteValue("boost parameters must be finite")
        if not 0.0 <= self.beta < 1.0:
            raise SpeedOutOfRange(f"boost speed must satisfy 0 <= beta < 1, got {self.beta!r}")
        if self.alpha < 0.0:
            raise SpeedOutOfRange(f"boost rapidity must be >= 0, got {self.alpha!r}")

    @property
    def lorentz_factor(self) -> float:
        return 1.0 / math.sqrt((1.0 - self.beta) * (1.0 + self.beta))


@dataclass(frozen=True)
class ParticleKinematics:
    """Particle energy in the lab frame.

    ``gamma`` is the energy factor p0/m, ``beta1`` the lab speed and ``delta``
    the rapidity. ``gamma`` is authoritative; ``beta1`` rounds to 1.0 for
    gamma beyond ~1e8.
    """

    gamma: float
    beta1: float
    delta: float

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.gamma, self.beta1, self.delta)):
            raise NonFiniteValue("particle kinematics must be finite")
        if self.gamma < 1.0:
            raise EnergyOutOfRange(f"energy factor must be >= 1, got {self.gamma!r}")


def boost_from_speed(beta: float) -> BoostParameters:
    beta = float(beta)
    if not math.isfinite(beta) or not 0.0 <= beta < 1.0:
        raise SpeedOutOfRange(f"boost speed must satisfy 0 <= beta < 1, got {beta!r}")
    return BoostParameters(beta=beta, alpha=math.atanh(beta))


def boost_from_rapidity(alpha: float) -> BoostParameters:
    alpha = float(alpha)
    if not math.isfinite(alpha) or alpha < 0.0:
        raise SpeedOutOfRange(f"boost rapidity must be finite and >= 0, got {alpha!r}")
    beta = math.tanh(alpha)
    if beta >= 1.0:
        raise SpeedOutOfRange(f"rapidity {alpha!r} rounds to beta == 1")
    return BoostParameters(beta=beta, alpha=alpha)


def particle_from_gamma(gamma: float) -> ParticleKinematics:
    gamma = float(gamma)
    if not math.isfinite(gamma) or gamma < 1.0:
        raise EnergyOutOfRange(f"energy factor must be finite and >= 1, got {gamma!r}")
    return ParticleKinematics(
        gamma=gamma,
        beta1=math.sqrt((1.0 - 1.0 / gamma) * (1.0 + 1.0 / gamma)),
        delta=math.acosh(gamma),
    )


def particle_from_speed(beta1: float) -> ParticleKinematics:
    beta1 = float(beta1)
    if not math.isfinite(beta1) or not 0.0 <= beta1 < 1.0:
        raise SpeedOutOfRange(f"particle speed must satisfy 0 <= beta1 < 1, got {beta1!r}")
    return ParticleKinematics(
        gamma=1.0 / math.sqrt((1.0 - beta1) * (1.0 + beta1)),
        beta1=beta1,
        delta=math.atanh(beta1),
    )


def particle_from_rapidity(delta: float) -> ParticleKinematics:
    delta = float(delta)
    if not math.isfinite(delta) or delta < 0.0:
        raise EnergyOutOfRange(f"particle rapidity must be finite and >= 0, got {delta!r}")
    return ParticleKinematics(gamma=math.cosh(delta), beta1=math.tanh(delta), delta=delta)


def wigner_angle(boost: BoostParameters, particle: ParticleKinematics) -> float:
    """Wigner rotation angle in radians for perpendicular boost and momentum.

    tan(omega) = sinh(alpha) sinh(delta) / (cosh(alpha) + cosh(delta)),
    which lies in [0, pi/2).
    """
    num = math.sinh(boost.alpha) * math.sinh(particle.delta)
    den = math.cosh(boost.alpha) + math.cosh(particle.delta)
    return math.atan2(num, den)


def asymptotic_half_angle(particle: ParticleKinematics) -> float:
    """Limit of sin(omega/2) as the boost speed goes to 1: sqrt((G - 1) / 2G)."""
    g = particle.gamma
    return math.sqrt((g - 1.0) / (2.0 * g))


# -- independent route: explicit 4x4 Lorentz matrices -------------------------

_METRIC = np.diag([1.0, -1.0, -1.0, -1.0])


def lorentz_boost(gamma: float, direction) -> np.ndarray:
    """Pure boost with Lorentz factor ``gamma`` along the unit 3-vector ``direction``.

    Active convention: maps the rest 4-velocity (1, 0, 0, 0) to
    (gamma, gamma*beta*n).
    """
    n = np.asarray(direction, dtype=float)
    n = n / np.linalg.norm(n)
    gb = math.sqrt((gamma - 1.0) * (gamma + 1.0))
    out = np.eye(4)
    out[0, 0] = gamma
    out[0, 1:] = gb * n
    out[1:, 0] = gb * n
    out[1:, 1:] += (gamma - 1.0) * np.outer(n, n)
    return out


def _boost_to(four_velocity: np.ndarray) -> np.ndarray:
    g = four_velocity[0]
    u = four_velocity[1:]
    out = np.eye(4)
    out[0, 0] = g
    out[0, 1:] = u
    out[1:, 0] = u
    out[1:, 1:] += np.outer(u, u) / (1.0 + g)
    return out


def y_rotation_angle(transform: np.ndarray) -> float:
    """Factor a proper Lorentz matrix as (pure boost) x (rotation) and return
    the rotation angle about y.

    The sign convention is the one that tilts +z toward +x for positive
    angles. Raises DecompositionFailure when the residual rotation is not
    about the y axis.
    """
    boost = _boost_to(transform[:, 0])
    rotation = _METRIC @ boost.T @ _METRIC @ transform
    scale = float(np.max(np.abs(transform))) ** 2
    tol = 1e-12 * max(1.0, scale)
    off_axis = max(
        abs(rotation[0, 0] - 1.0),
        float(np.max(np.abs(rotation[0, 1:]))),
        float(np.max(np.abs(rotation[1:, 0]))),
        abs(rotation[2, 2] - 1.0),
        abs(rotation[1, 2]),
        abs(rotation[2, 1]),
        abs(rotation[3, 2]),
        abs(rotation[2, 3]),
    )
    if off_axis > tol:
        raise DecompositionFailure(
            f"residual is not a rotation about y (off-axis residual {off_axis:.3e} > {tol:.3e})"
        )
    sin = 0.5 * (rotation[1, 3] - rotation[3, 1])
    cos = 0.5 * (rotation[1, 1] + rotation[3, 3])
    return math.atan2(sin, cos)


def wigner_angle_oracle(boost: BoostParameters, particle: ParticleKinematics) -> float:
    """Wigner angle from composing the frame boost (x) with the particle boost (z).

    Shares no formula with :func:`wigner_angle`; it only multiplies and
    factors 4x4 matrices.
    """
    frame = lorentz_boost(boost.lorentz_factor, (1.0, 0.0, 0.0))
    standard = lorentz_boost(particle.gamma, (0.0, 0.0, 1.0))
    return y_rotation_angle(frame @ standard)
