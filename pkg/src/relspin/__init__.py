"""Relativistic transformations of spin-1/2 states and CHSH expectations."""
from .bell import (
    ChshResult,
    MeasurementQuadruple,
    SingleParticleReport,
    bell_operator,
    chsh_oracle,
    closed_form_bc_phi,
    closed_form_bc_psi,
    closed_form_bl_phi,
    czachor_phi_dense_law,
    printed_quadruple_psi,
    single_particle_oracle,
    single_particle_report,
    standard_quadruple_phi,
    standard_quadruple_psi,
)
from .errors import (
    ConfigError,
    DecompositionFailure,
    EnergyOutOfRange,
    NonHermitianObservable,
    RelspinError,
    SpeedOutOfRange,
)
from .kinematics import (
    BoostParameters,
    ParticleKinematics,
    asymptotic_half_angle,
    boost_from_rapidity,
    boost_from_speed,
    particle_from_gamma,
    particle_from_rapidity,
    particle_from_speed,
    wigner_angle,
    wigner_angle_oracle,
)
from .linalg import BACKEND
from .operators import (
    Czachor,
    Direction,
    Pauli,
    czachor_along,
    czachor_eigenvalues,
    czachor_norm_ratio,
    pauli_along,
    spin_along,
)
from .scan import ScanConfig, ScanRow, consistency_report, emit, run_scan
from .states import (
    BellStateKind,
    PairState,
    SpinState,
    bell_state,
    boost_pair,
    boost_single,
    fidelity,
    spin_down,
    spin_up,
    wigner_rotation,
)

__version__ = "0.1.0"
