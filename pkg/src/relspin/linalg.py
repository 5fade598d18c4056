"""Fixed-size complex linear algebra for one and two spin-1/2 particles.

Only dimensions 2 and 4 are supported. Vectors are expressed in the spin-z
basis; two-particle vectors use the product order (++, +-, -+, --), with the
first particle as the slow index.

The arithmetic kernels come from the compiled ``_ckernel`` extension when it
is importable and from ``_pykernel`` otherwise. Set ``RELSPIN_BACKEND=python``
before import, or call :func:`use_backend`, to force the fallback.
"""
from __future__ import annotations

import math
import os
from types import ModuleType

import numpy as np

from . import _pykernel
from .errors import InternalConsistencyError, NonFiniteValue, NonHermitianObservable

try:
    from . import _ckernel
except ImportError:  # extension not built
    _ckernel = None

__all__ = [
    "BACKEND",
    "IDENTITY2",
    "IDENTITY4",
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "adjoint",
    "apply",
    "available_backends",
    "eigenvalues2",
    "expectation",
    "get_tolerance",
    "inner",
    "is_hermitian",
    "is_unitary",
    "kron",
    "matmul",
    "matrix",
    "norm_squared",
    "set_tolerance",
    "use_backend",
    "vector",
]

_tolerance = 1e-12


def get_tolerance() -> float:
    """Tolerance used for every algebraic identity check in the package."""
    return _tolerance


def set_tolerance(value: float) -> None:
    global _tolerance
    if not (value > 0 and math.isfinite(value)):
        raise ValueError(f"tolerance must be positive and finite, got {value!r}")
    _tolerance = float(value)


def available_backends() -> list[str]:
    return ["cython", "python"] if _ckernel is not None else ["python"]


def use_backend(name: str) -> str:
    """Switch the arithmetic kernel; returns the previously active backend name."""
    global _kernel, BACKEND
    if name == "cython":
        if _ckernel is None:
            raise ImportError("relspin._ckernel is not built")
        module: ModuleType = _ckernel
    elif name == "python":
        module = _pykernel
    else:
        raise ValueError(f"unknown backend {name!r}")
    previous = BACKEND
    _kernel, BACKEND = module, name
    return previous


if _ckernel is not None and os.environ.get("RELSPIN_BACKEND", "").lower() != "python":
    _kernel, BACKEND = _ckernel, "cython"
else:
    _kernel, BACKEND = _pykernel, "python"


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


def _coerce(values, shapes: tuple[tuple[int, ...], ...], what: str) -> np.ndarray:
    arr = np.array(values, dtype=np.complex128, order="C")
    if arr.shape not in shapes:
        raise ValueError(f"{what} must have shape in {shapes}, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteValue(f"{what} contains NaN or infinity")
    return _freeze(arr)


def vector(values) -> np.ndarray:
    """Read-only complex vector of length 2 or 4."""
    return _coerce(values, ((2,), (4,)), "vector")


def matrix(values) -> np.ndarray:
    """Read-only complex 2x2 or 4x4 matrix."""
    return _coerce(values, ((2, 2), (4, 4)), "matrix")


IDENTITY2 = matrix([[1, 0], [0, 1]])
IDENTITY4 = matrix(np.eye(4))
SIGMA_X = matrix([[0, 1], [1, 0]])
SIGMA_Y = matrix([[0, -1j], [1j, 0]])
SIGMA_Z = matrix([[1, 0], [0, -1]])


def _c(arr: np.ndarray) -> np.ndarray:
    # kernels want C-contiguous complex128
    if arr.dtype != np.complex128 or not arr.flags.c_contiguous:
        return np.ascontiguousarray(arr, dtype=np.complex128)
    return arr


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Tensor product of two 2x2 matrices in the (++, +-, -+, --) order."""
    if a.shape != (2, 2) or b.shape != (2, 2):
        raise ValueError("kron is defined for 2x2 factors only")
    return _freeze(_kernel.kron(_c(a), _c(b)))


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape != b.shape or a.shape not in ((2, 2), (4, 4)):
        raise ValueError(f"incompatible shapes {a.shape} and {b.shape}")
    return _freeze(_kernel.matmul(_c(a), _c(b)))


def apply(m: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Matrix-vector product ``m @ v``."""
    if m.shape != (v.shape[0], v.shape[0]):
        raise ValueError(f"incompatible shapes {m.shape} and {v.shape}")
    return _freeze(_kernel.matvec(_c(m), _c(v)))


def adjoint(m: np.ndarray) -> np.ndarray:
    return _freeze(_kernel.adjoint(_c(m)))


def inner(u: np.ndarray, v: np.ndarray) -> complex:
    """<u|v>, conjugate-linear in the first argument."""
    if u.shape != v.shape:
        raise ValueError(f"incompatible shapes {u.shape} and {v.shape}")
    return complex(_kernel.vdot(_c(u), _c(v)))


def norm_squared(v: np.ndarray) -> float:
    return inner(v, v).real


def is_hermitian(m: np.ndarray, tol: float | None = None) -> bool:
    tol = _tolerance if tol is None else tol
    return _kernel.herm_residual(_c(m)) <= tol


def is_unitary(m: np.ndarray, tol: float | None = None) -> bool:
    tol = _tolerance if tol is None else tol
    eye = IDENTITY2 if m.shape == (2, 2) else IDENTITY4
    return bool(np.max(np.abs(matmul(adjoint(m), m) - eye)) <= tol)


def _check_hermitian(obs: np.ndarray) -> None:
    residual = _kernel.herm_residual(_c(obs))
    if residual > _tolerance:
        raise NonHermitianObservable(f"observable deviates from its adjoint by {residual:.3e}")


def expectation(state: np.ndarray, obs: np.ndarray) -> float:
    """<state|obs|state> for a normalized state and Hermitian observable.

    Raises NonHermitianObservable if ``obs`` fails the adjoint check and
    InternalConsistencyError if the result carries an imaginary part above
    the tolerance.
    """
    if obs.shape != (state.shape[0], state.shape[0]):
        raise ValueError(f"incompatible shapes {state.shape} and {obs.shape}")
    _check_hermitian(obs)
    value = complex(_kernel.expect(_c(state), _c(obs)))
    if abs(value.imag) >= _tolerance:
        raise InternalConsistencyError(f"expectation has imaginary part {value.imag:.3e}")
    return value.real


def eigenvalues2(obs: np.ndarray) -> tuple[float, float]:
    """Closed-form eigenvalues of a 2x2 Hermitian matrix, largest first."""
    if obs.shape != (2, 2):
        raise ValueError("eigenvalues2 needs a 2x2 matrix")
    _check_hermitian(obs)
    a = obs[0, 0].real
    d = obs[1, 1].real
    mean = 0.5 * (a + d)
    radius = math.hypot(0.5 * (a - d), abs(obs[0, 1]))
    return mean + radius, mean - radius
