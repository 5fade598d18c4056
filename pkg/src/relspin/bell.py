"""CHSH operators, dense expectations and the closed-form curves they are
checked against.

The Bell operator is B = a (x) (b + b') + a' (x) (b - b'), built from either
operator family. :func:`chsh_oracle` evaluates <B> by explicit 4x4 algebra and
is treated as ground truth; the ``closed_form_*`` functions return the
reference formulas unmodified so that any disagreement stays visible.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from . import linalg
from .kinematics import BoostParameters, ParticleKinematics, boost_from_speed, wigner_angle
from .operators import Czachor, Direction, OperatorFamily, Pauli, czachor_along, spin_along
from .states import PairState, boost_single, spin_up

SQRT2 = math.sqrt(2.0)
TSIRELSON = 2.0 * SQRT2
_R2 = 1.0 / SQRT2

#: Stern-Gerlach axis used for the single-particle comparison.
MEASUREMENT_AXIS = Direction(_R2, 0.0, _R2)


@dataclass(frozen=True)
class MeasurementQuadruple:
    a: Direction
    a_prime: Direction
    b: Direction
    b_prime: Direction

    @classmethod
    def from_components(cls, values) -> "MeasurementQuadruple":
        """Build from 12 reals: a, a', b, b' as consecutive (x, y, z) triples."""
        values = [float(v) for v in values]
        if len(values) != 12:
            raise ValueError(f"a custom quadruple needs 12 components, got {len(values)}")
        return cls(*(Direction(*values[i : i + 3]) for i in range(0, 12, 3)))


def standard_quadruple_phi() -> MeasurementQuadruple:
    """Settings giving 2*sqrt(2) on (|++> + |-->)/sqrt(2)."""
    return MeasurementQuadruple(
        a=Direction(_R2, -_R2, 0.0),
        a_prime=Direction(-_R2, -_R2, 0.0),
        b=Direction(0.0, 1.0, 0.0),
        b_prime=Direction(1.0, 0.0, 0.0),
    )


def standard_quadruple_psi() -> MeasurementQuadruple:
    """Settings giving 2*sqrt(2) on (|+-> + |-+>)/sqrt(2).

    Found by enumerating sign choices of the vector components; see
    :func:`printed_quadruple_psi` for the antiparallel variant.
    """
    return MeasurementQuadruple(
        a=Direction(_R2, _R2, 0.0),
        a_prime=Direction(_R2, -_R2, 0.0),
        b=Direction(1.0, 0.0, 0.0),
        b_prime=Direction(0.0, 1.0, 0.0),
    )


def printed_quadruple_psi() -> MeasurementQuadruple:
    """Psi+ settings with antiparallel a and a'.

    With a' = -a the CHSH sum collapses to 2 E(a, b') = sqrt(2) on psi+,
    so these cannot reach the Tsirelson bound.
    """
    return MeasurementQuadruple(
        a=Direction(_R2, _R2, 0.0),
        a_prime=Direction(-_R2, -_R2, 0.0),
        b=Direction(1.0, 0.0, 0.0),
        b_prime=Direction(0.0, 1.0, 0.0),
    )


def bell_operator(quad: MeasurementQuadruple, family: OperatorFamily):
    """4x4 Hermitian CHSH operator for the given settings and family."""
    a, ap = family.along(quad.a), family.along(quad.a_prime)
    b, bp = family.along(quad.b), family.along(quad.b_prime)
    return linalg.matrix(linalg.kron(a, b + bp) + linalg.kron(ap, b - bp))


@dataclass(frozen=True)
class ChshResult:
    value: float
    family: OperatorFamily
    quadruple: MeasurementQuadruple
    beta: float
    gamma: float
    omega: float


def chsh_oracle(state: PairState, quad: MeasurementQuadruple, family: OperatorFamily) -> ChshResult:
    value = linalg.expectation(state.amplitudes, bell_operator(quad, family))
    beta = family.boost.beta if isinstance(family, Czachor) else state.beta
    return ChshResult(
        value=value, family=family, quadruple=quad, beta=beta, gamma=state.gamma, omega=state.omega
    )


# -- closed forms -------------------------------------------------------------


def closed_form_bl_phi(omega: float) -> float:
    """Pauli-family <B> on the boosted phi+ state: 2 sqrt(2) cos^2(omega)."""
    return TSIRELSON * math.cos(omega) ** 2


def closed_form_bc_phi(boost: BoostParameters, omega: float) -> float:
    """Czachor-family <B> on boosted phi+, cos(omega) form:
    2 (sqrt(1 - beta^2) + cos(omega)) / sqrt(2 - beta^2).

    The dense evaluation gives cos(2 omega) in place of cos(omega); see
    :func:`czachor_phi_dense_law`. Returned unmodified on purpose.
    """
    b = boost.beta
    return 2.0 * (math.sqrt((1.0 - b) * (1.0 + b)) + math.cos(omega)) / math.sqrt(2.0 - b * b)


def czachor_phi_dense_law(boost: BoostParameters, omega: float) -> float:
    """Closed form that the dense Czachor evaluation on boosted phi+ follows."""
    b = boost.beta
    return 2.0 * (math.sqrt((1.0 - b) * (1.0 + b)) + math.cos(2.0 * omega)) / math.sqrt(2.0 - b * b)


def closed_form_bc_psi(boost: BoostParameters) -> float:
    """Czachor-family <B> on psi+: 2 (1 + sqrt(1 - beta^2)) / sqrt(2 - beta^2)."""
    b = boost.beta
    return 2.0 * (1.0 + math.sqrt((1.0 - b) * (1.0 + b))) / math.sqrt(2.0 - b * b)


# -- single particle ----------------------------------------------------------


@dataclass(frozen=True)
class SingleParticleReport:
    """Spin expectations (units of hbar) along the fixed measurement axis for
    a particle prepared in |+> in the lab."""

    lab_pauli: float
    moving_pauli: float
    lab_czachor: float
    moving_czachor: float


def single_particle_report(
    boost: BoostParameters, particle: ParticleKinematics
) -> SingleParticleReport:
    """Closed forms for the four single-particle expectations."""
    omega = wigner_angle(boost, particle)
    b = boost.beta
    lab = 1.0 / (2.0 * SQRT2)
    return SingleParticleReport(
        lab_pauli=lab,
        moving_pauli=(math.cos(omega) + math.sin(omega)) / (2.0 * SQRT2),
        lab_czachor=lab,
        moving_czachor=(math.sqrt((1.0 - b) * (1.0 + b)) * math.cos(omega) + math.sin(omega))
        / (2.0 * math.sqrt(2.0 - b * b)),
    )


def single_particle_oracle(
    boost: BoostParameters, particle: ParticleKinematics
) -> SingleParticleReport:
    """Same four quantities by dense evaluation on the rotated state."""
    lab_state = spin_up().amplitudes
    moving_state = boost_single(spin_up(), boost, particle).amplitudes
    rest = boost_from_speed(0.0)
    return SingleParticleReport(
        lab_pauli=linalg.expectation(lab_state, spin_along(MEASUREMENT_AXIS)),
        moving_pauli=linalg.expectation(moving_state, spin_along(MEASUREMENT_AXIS)),
        lab_czachor=linalg.expectation(lab_state, 0.5 * czachor_along(MEASUREMENT_AXIS, rest)),
        moving_czachor=linalg.expectation(
            moving_state, 0.5 * czachor_along(MEASUREMENT_AXIS, boost)
        ),
    )


__all__ = [
    "MEASUREMENT_AXIS",
    "TSIRELSON",
    "ChshResult",
    "Czachor",
    "MeasurementQuadruple",
    "Pauli",
    "SingleParticleReport",
    "bell_operator",
    "chsh_oracle",
    "closed_form_bc_phi",
    "closed_form_bc_psi",
    "closed_form_bl_phi",
    "czachor_phi_dense_law",
    "printed_quadruple_psi",
    "single_particle_oracle",
    "single_particle_report",
    "standard_quadruple_phi",
    "standard_quadruple_psi",
]
