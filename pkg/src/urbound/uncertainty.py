"""Scalar functionals of a state and one or two operators.

States are unit vectors (pure) or density matrices; operators are dense
complex matrices. Every function accepts plain ndarrays.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

PHASE_EPS = 1e-14  # |Bargmann invariant| below this leaves its argument undefined


class DimensionMismatchError(ValueError):
    """State and operator dimensions disagree."""


class DegenerateDecompositionError(ValueError):
    """State is an eigenvector, so there is no orthogonal component."""


def _check_dims(state: np.ndarray, *ops: np.ndarray) -> None:
    d = state.shape[0]
    for op in ops:
        if op.shape != (d, d):
            raise DimensionMismatchError("operator dimension does not match the state")


def expectation(state: np.ndarray, op: np.ndarray) -> complex:
    """<op> on a pure state (1-D) or density matrix (2-D)."""
    state = np.asarray(state, dtype=complex)
    op = np.asarray(op, dtype=complex)
    _check_dims(state, op)
    if state.ndim == 1:
        return complex(np.vdot(state, op @ state))
    if state.ndim == 2:
        return complex(np.trace(state @ op))
    raise ValueError("state must be a vector or a density matrix")


def _clamp_unit(x: float, slack: float = 1e-12) -> float:
    if -slack <= x < 0.0:
        return 0.0
    if 1.0 < x <= 1.0 + slack:
        return 1.0
    return x


def variance(state: np.ndarray, u: np.ndarray) -> float:
    """1 - |<U>|^2, the variance of a unitary operator; lies in [0, 1]."""
    return _clamp_unit(1.0 - abs(expectation(state, u)) ** 2)


def visibility(state: np.ndarray, u: np.ndarray) -> float:
    """Interference visibility |<U>|; satisfies V^2 + variance = 1."""
    return abs(expectation(state, u))


def fubini_study(psi1: np.ndarray, psi2: np.ndarray) -> float:
    """Squared Fubini-Study distance 4 (1 - |<psi1|psi2>|^2)."""
    psi1 = np.asarray(psi1, dtype=complex)
    psi2 = np.asarray(psi2, dtype=complex)
    if psi1.shape != psi2.shape:
        raise DimensionMismatchError("states live in different dimensions")
    return 4.0 * _clamp_unit(1.0 - abs(np.vdot(psi1, psi2)) ** 2)


def covariance(state: np.ndarray, u: np.ndarray, v: np.ndarray) -> complex:
    """Cov(U, V) = <U^dag V> - <U^dag><V>."""
    u = np.asarray(u, dtype=complex)
    ud = u.conj().T
    return expectation(state, ud @ np.asarray(v, dtype=complex)) - expectation(
        state, ud
    ) * expectation(state, v)


@dataclass(frozen=True)
class BargmannTriple:
    """Three-point Bargmann invariant of (psi, U psi, V psi).

    phase is the argument of value and is meaningless when phase_defined is
    False (modulus at numerical zero); consumers then treat any
    cos(phase) * modulus term as 0.
    """

    value: complex
    modulus: float
    phase: float
    phase_defined: bool


def bargmann3(psi: np.ndarray, u: np.ndarray, v: np.ndarray) -> BargmannTriple:
    """<psi|U psi><U psi|V psi><V psi|psi>, gauge invariant."""
    psi = np.asarray(psi, dtype=complex)
    _check_dims(psi, u, v)
    psi_u = u @ psi
    psi_v = v @ psi
    value = complex(np.vdot(psi, psi_u) * np.vdot(psi_u, psi_v) * np.vdot(psi_v, psi))
    modulus = abs(value)
    defined = modulus > PHASE_EPS
    phase = float(np.angle(value)) if defined else 0.0
    return BargmannTriple(value=value, modulus=modulus, phase=phase, phase_defined=defined)


def gvariance(state: np.ndarray, a: np.ndarray) -> float:
    """Generalized variance <A A^dag> - |<A>|^2 for an arbitrary operator.

    Coincides with variance(state, A) when A is unitary.
    """
    a = np.asarray(a, dtype=complex)
    val = expectation(state, a @ a.conj().T).real - abs(expectation(state, a)) ** 2
    return val if val > 0.0 else (0.0 if val >= -1e-12 else val)


def vaidman_perp(psi: np.ndarray, a: np.ndarray) -> tuple[complex, float, np.ndarray]:
    """Decompose A|psi> = mean |psi> + dev |perp> with <psi|perp> = 0.

    dev is the norm of the component of A|psi> orthogonal to psi. Raises
    DegenerateDecompositionError when psi is an eigenvector of A.
    """
    psi = np.asarray(psi, dtype=complex)
    a = np.asarray(a, dtype=complex)
    _check_dims(psi, a)
    apsi = a @ psi
    mean = complex(np.vdot(psi, apsi))
    resid = apsi - mean * psi
    dev = float(np.linalg.norm(resid))
    if dev <= 1e-12:
        raise DegenerateDecompositionError("state is an eigenvector of the operator")
    return mean, dev, resid / dev
