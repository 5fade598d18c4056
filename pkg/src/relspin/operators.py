"""Direction-dependent spin observables.

Two families are provided: the Pauli operator n.sigma and Czachor's
boost-dependent operator, which rescales the component of the measurement
direction perpendicular to the boost axis by sqrt(1 - beta^2) and then
renormalizes. Units: hbar = 1, so spin operators are half the corresponding
direction operators.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import NonFiniteValue
from .kinematics import BoostParameters, boost_from_speed


@dataclass(frozen=True)
class Direction:
    """Unit 3-vector. Inputs are normalized on construction; zero is rejected."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        comps = (float(self.x), float(self.y), float(self.z))
        if not all(math.isfinite(c) for c in comps):
            raise NonFiniteValue("direction components must be finite")
        norm = math.sqrt(sum(c * c for c in comps))
        if norm == 0.0:
            raise ValueError("direction must be non-zero")
        for name, c in zip("xyz", comps):
            object.__setattr__(self, name, c / norm)

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    def dot(self, other: "Direction") -> float:
        return self.x * other.x + self.y * other.y + self.z * other.z


X_AXIS = Direction(1.0, 0.0, 0.0)
Y_AXIS = Direction(0.0, 1.0, 0.0)
Z_AXIS = Direction(0.0, 0.0, 1.0)


def _sigma_dot(vx: float, vy: float, vz: float) -> np.ndarray:
    return linalg.matrix([[vz, complex(vx, -vy)], [complex(vx, vy), -vz]])


def pauli_along(a: Direction) -> np.ndarray:
    """a.sigma: Hermitian, traceless, eigenvalues +-1."""
    return _sigma_dot(a.x, a.y, a.z)


def spin_along(a: Direction) -> np.ndarray:
    """Spin observable (1/2) a.sigma in units of hbar."""
    return _sigma_dot(0.5 * a.x, 0.5 * a.y, 0.5 * a.z)


def _czachor_parts(a: Direction, boost: BoostParameters, e: Direction):
    c = e.dot(a)
    par = (c * e.x, c * e.y, c * e.z)
    perp = (a.x - par[0], a.y - par[1], a.z - par[2])
    shrink = math.sqrt((1.0 - boost.beta) * (1.0 + boost.beta))
    numerator = tuple(shrink * p + q for p, q in zip(perp, par))
    norm = math.sqrt(1.0 + boost.beta**2 * (c * c - 1.0))
    if not (math.isfinite(norm) and norm > 0.0) or not all(map(math.isfinite, numerator)):
        raise NonFiniteValue(f"Czachor operator undefined at beta={boost.beta!r}")
    return numerator, norm


def czachor_along(a: Direction, boost: BoostParameters, e: Direction = X_AXIS) -> np.ndarray:
    """Czachor's direction operator for measurement axis ``a`` seen from a
    frame boosted with speed ``boost.beta`` along ``e``.

    Coincides with :func:`pauli_along` when beta is 0 or when ``a`` is
    parallel or perpendicular to ``e``.
    """
    (vx, vy, vz), norm = _czachor_parts(a, boost, e)
    return _sigma_dot(vx / norm, vy / norm, vz / norm)


def czachor_norm_ratio(a: Direction, boost: BoostParameters, e: Direction = X_AXIS) -> float:
    """|v| / n for the numerator vector v and normalization n of the operator.

    This equals the modulus of both eigenvalues; it is identically 1 for a
    unit ``a``.
    """
    v, norm = _czachor_parts(a, boost, e)
    return math.sqrt(sum(c * c for c in v)) / norm


def czachor_eigenvalues(
    a: Direction, boost: BoostParameters, e: Direction = X_AXIS
) -> tuple[float, float]:
    return linalg.eigenvalues2(czachor_along(a, boost, e))


@dataclass(frozen=True)
class Pauli:
    """Pauli operator family; independent of the observer's motion."""

    name = "pauli"

    def along(self, a: Direction) -> np.ndarray:
        return pauli_along(a)


@dataclass(frozen=True)
class Czachor:
    """Czachor operator family for a given boost along ``axis``."""

    boost: BoostParameters = field(default_factory=lambda: boost_from_speed(0.0))
    axis: Direction = X_AXIS

    name = "czachor"

    def along(self, a: Direction) -> np.ndarray:
        return czachor_along(a, self.boost, self.axis)


OperatorFamily = Pauli | Czachor
