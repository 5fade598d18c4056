"""Spin states and how they look from a boosted frame.

A boost along x rotates the spin of a particle moving along z about the y
axis by the Wigner angle. Particles moving along -z pick up the opposite
angle, which is why a pair flying apart along +-z is transformed by
D(+omega) (x) D(-omega).

Momenta are sharp and carried only as metadata.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import NotNormalized
from .kinematics import BoostParameters, ParticleKinematics, wigner_angle

_R2 = 1.0 / math.sqrt(2.0)


def _check_norm(amplitudes: np.ndarray) -> None:
    dev = abs(linalg.norm_squared(amplitudes) - 1.0)
    if dev > linalg.get_tolerance():
        raise NotNormalized(f"squared norm deviates from 1 by {dev:.3e}")


@dataclass(frozen=True, eq=False)
class SpinState:
    """Normalized single-particle spin state in the (+, -) z basis."""

    amplitudes: np.ndarray

    def __post_init__(self):
        amps = linalg.vector(self.amplitudes)
        if amps.shape != (2,):
            raise ValueError("a spin state has two amplitudes")
        _check_norm(amps)
        object.__setattr__(self, "amplitudes", amps)


@dataclass(frozen=True, eq=False)
class PairState:
    """Normalized two-particle spin state in the (++, +-, -+, --) basis.

    ``momenta`` holds the sign of each particle's z momentum; the default
    (+1, -1) is the back-to-back configuration. ``beta``, ``gamma`` and
    ``omega`` record the frame the state is expressed in (lab by default).
    """

    amplitudes: np.ndarray
    momenta: tuple[int, int] = (1, -1)
    beta: float = 0.0
    gamma: float = 1.0
    omega: float = 0.0

    def __post_init__(self):
        amps = linalg.vector(self.amplitudes)
        if amps.shape != (4,):
            raise ValueError("a pair state has four amplitudes")
        if any(s not in (1, -1) for s in self.momenta) or len(self.momenta) != 2:
            raise ValueError(f"momenta must be two signs, got {self.momenta!r}")
        _check_norm(amps)
        object.__setattr__(self, "amplitudes", amps)


class BellStateKind(enum.Enum):
    PHI_PLUS = "phi+"
    PHI_MINUS = "phi-"
    PSI_PLUS = "psi+"
    PSI_MINUS = "psi-"


_BELL_AMPLITUDES = {
    BellStateKind.PHI_PLUS: (_R2, 0, 0, _R2),
    BellStateKind.PHI_MINUS: (_R2, 0, 0, -_R2),
    BellStateKind.PSI_PLUS: (0, _R2, _R2, 0),
    BellStateKind.PSI_MINUS: (0, _R2, -_R2, 0),
}


def spin_up() -> SpinState:
    return SpinState(np.array([1.0, 0.0]))


def spin_down() -> SpinState:
    return SpinState(np.array([0.0, 1.0]))


def bell_state(kind: BellStateKind) -> PairState:
    return PairState(np.array(_BELL_AMPLITUDES[BellStateKind(kind)]))


def wigner_rotation(omega: float) -> np.ndarray:
    """Spin-1/2 representation cos(omega/2) I - i sin(omega/2) sigma_y."""
    c = math.cos(0.5 * omega)
    s = math.sin(0.5 * omega)
    return linalg.matrix([[c, -s], [s, c]])


def pair_rotation(omega: float, momenta: tuple[int, int] = (1, -1)) -> np.ndarray:
    """D(s1 * omega) (x) D(s2 * omega) for momentum signs (s1, s2)."""
    s1, s2 = momenta
    return linalg.kron(wigner_rotation(s1 * omega), wigner_rotation(s2 * omega))


def boost_single(
    state: SpinState, boost: BoostParameters, particle: ParticleKinematics
) -> SpinState:
    """Spin state of a +z-moving particle as seen from the boosted frame."""
    omega = wigner_angle(boost, particle)
    return SpinState(linalg.apply(wigner_rotation(omega), state.amplitudes))


def boost_pair(state: PairState, boost: BoostParameters, particle: ParticleKinematics) -> PairState:
    """Pair state as seen from the boosted frame.

    Both particles share |p|, so they share the Wigner angle magnitude; the
    sign follows each particle's momentum direction.
    """
    omega = wigner_angle(boost, particle)
    amps = linalg.apply(pair_rotation(omega, state.momenta), state.amplitudes)
    return PairState(
        amps, momenta=state.momenta, beta=boost.beta, gamma=particle.gamma, omega=omega
    )


def fidelity(s1, s2) -> float:
    """|<s1|s2>|^2; accepts states or raw amplitude arrays."""
    u = getattr(s1, "amplitudes", s1)
    v = getattr(s2, "amplitudes", s2)
    return abs(linalg.inner(linalg.vector(u), linalg.vector(v))) ** 2
