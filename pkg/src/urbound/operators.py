"""Constructors for the unitary operator families and their Hamiltonians.

All finite-dimensional operators share one index convention: the symmetric
label j runs over -floor(d/2) .. floor((d-1)/2) and is stored in slots
0 .. d-1 in increasing j. Helper functions map between the two.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import frobenius, is_unitary

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = (SIGMA_X, SIGMA_Y, SIGMA_Z)


class BadDimensionError(ValueError):
    """Operator family undefined at the requested dimension."""


class NotUnitVectorError(ValueError):
    """Direction vector is not normalized."""


class NotWeylPairError(ValueError):
    """No single phase satisfies UV = e^{i phi} VU within tolerance."""


def index_range(d: int) -> np.ndarray:
    """Symmetric labels -floor(d/2) .. floor((d-1)/2) in slot order."""
    half = d // 2
    return np.arange(d) - half


def slot_of(j: int, d: int) -> int:
    """Storage slot of symmetric label j (taken mod d)."""
    half = d // 2
    return (j + half) % d


def clock(d: int) -> np.ndarray:
    """Diagonal unitary with entries e^{i 2 pi j / d} over the symmetric range."""
    if d < 2:
        raise BadDimensionError("clock needs dimension >= 2")
    return np.diag(np.exp(2j * np.pi * index_range(d) / d))


def shift(d: int) -> np.ndarray:
    """Cyclic permutation sending slot s to slot s+1 (label j to j+1)."""
    if d < 2:
        raise BadDimensionError("shift needs dimension >= 2")
    return np.roll(np.eye(d, dtype=complex), 1, axis=0)


def dft(d: int) -> np.ndarray:
    """Symmetric-range Fourier matrix F with F clock F^dag = shift exactly.

    Entries are e^{-i 2 pi j k / d} / sqrt(d) with both indices on the
    symmetric range; the sign of the exponent is what makes the clock
    conjugate onto the shift (rather than its inverse).
    """
    if d < 2:
        raise BadDimensionError("dft needs dimension >= 2")
    j = index_range(d)
    return np.exp(-2j * np.pi * np.outer(j, j) / d) / np.sqrt(d)


def pauli_unitary(a) -> np.ndarray:
    """a . sigma for a real unit 3-vector: Hermitian, unitary, traceless."""
    a = np.asarray(a, dtype=float)
    if a.shape != (3,):
        raise ValueError("direction must be a real 3-vector")
    if abs(np.linalg.norm(a) - 1.0) > 1e-12:
        raise NotUnitVectorError("direction vector is not unit length")
    return a[0] * SIGMA_X + a[1] * SIGMA_Y + a[2] * SIGMA_Z


def gamma_generators(n: int) -> list[np.ndarray]:
    """2n pairwise anticommuting Hermitian unitaries on dimension 2^n.

    Jordan-Wigner ladder: generator 2k-1 is sz^(k-1) x sx x 1^(n-k),
    generator 2k swaps sx for sy.
    """
    if not 1 <= n <= 5:
        raise ValueError("n must be between 1 and 5")
    gammas = []
    for k in range(1, n + 1):
        for mid in (SIGMA_X, SIGMA_Y):
            g = np.eye(1, dtype=complex)
            for _ in range(k - 1):
                g = np.kron(g, SIGMA_Z)
            g = np.kron(g, mid)
            for _ in range(n - k):
                g = np.kron(g, np.eye(2, dtype=complex))
            gammas.append(g)
    return gammas


def commutation_phase(u: np.ndarray, v: np.ndarray, tol: float = 1e-8) -> float:
    """Phase phi in (-pi, pi] with UV = e^{i phi} VU.

    Extracted from the entry ratio at the largest-modulus entry of VU and
    verified globally; raises NotWeylPairError when no single phase fits.
    """
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    d = u.shape[0]
    uv = u @ v
    vu = v @ u
    idx = np.unravel_index(np.argmax(np.abs(vu)), vu.shape)
    ratio = uv[idx] / vu[idx]
    phi = float(np.angle(ratio))
    if phi <= -np.pi + 1e-9:
        phi += 2.0 * np.pi  # the boundary phase is reported as +pi, not -pi
    if frobenius(uv - np.exp(1j * phi) * vu) > tol * d:
        raise NotWeylPairError("operators do not satisfy a single-phase Weyl relation")
    return phi


@dataclass(frozen=True)
class WeylPair:
    """Unitary pair with UV = e^{i phase} VU."""

    u: np.ndarray
    v: np.ndarray
    dim: int
    phase: float


def weyl_pair(u: np.ndarray, v: np.ndarray, tol: float = 1e-10) -> WeylPair:
    """Validate unitarity and the commutation phase, then freeze the pair."""
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    if u.shape != v.shape or u.ndim != 2:
        raise ValueError("operators must be square matrices of equal dimension")
    if not (is_unitary(u, tol) and is_unitary(v, tol)):
        raise ValueError("both operators must be unitary")
    phi = commutation_phase(u, v)
    if phi <= 0.0:
        phi += 2.0 * np.pi  # store in (0, 2 pi)
    return WeylPair(u=u, v=v, dim=u.shape[0], phase=phi)


def clock_shift_pair(d: int) -> WeylPair:
    """The canonical clock/shift pair, phase 2 pi / d."""
    return WeylPair(u=clock(d), v=shift(d), dim=d, phase=2.0 * np.pi / d)


def translation(pair: WeylPair, m: int, n: int) -> np.ndarray:
    """Phase-space translation U^m V^{-n}."""
    um = np.linalg.matrix_power(pair.u, m % pair.dim if _is_cyclic(pair) else m)
    vn = np.linalg.matrix_power(pair.v.conj().T, n % pair.dim if _is_cyclic(pair) else n)
    return um @ vn


def _is_cyclic(pair: WeylPair) -> bool:
    """True when U^d = V^d = I, so powers can be reduced mod d."""
    d = pair.dim
    return abs(pair.phase - 2.0 * np.pi / d) < 1e-12


def harper(pair: WeylPair) -> np.ndarray:
    """H = -(U + U^dag)/2 - (V + V^dag)/2; Hermitian by construction."""
    u, v = pair.u, pair.v
    h = -0.5 * (u + u.conj().T) - 0.5 * (v + v.conj().T)
    return 0.5 * (h + h.conj().T)


def tilted_harper(pair: WeylPair, theta: float, phi_u: float = 0.0, phi_v: float = 0.0) -> np.ndarray:
    """-cos(theta) C_U~ - sin(theta) C_V~ with U~ = e^{-i phi_u} U.

    At theta = pi/4 and zero phases this is harper(pair) / sqrt(2).
    """
    ut = np.exp(-1j * phi_u) * pair.u
    vt = np.exp(-1j * phi_v) * pair.v
    h = -np.cos(theta) * 0.5 * (ut + ut.conj().T) - np.sin(theta) * 0.5 * (vt + vt.conj().T)
    return 0.5 * (h + h.conj().T)
