"""Dense complex linear algebra: Hermitian eigensolver and seeded random states.

Everything in this module is a pure function of its arguments; random
generation is deterministic per (dims, seed).
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np


class NotHermitianError(ValueError):
    """Input matrix fails the Hermitian symmetry check."""


class NoConvergenceError(RuntimeError):
    """Jacobi sweeps exhausted before reaching the off-diagonal target."""


class DimensionTooSmallError(ValueError):
    """Operation needs a larger Hilbert space than the one supplied."""


class BadRankError(ValueError):
    """Requested mixture rank outside 1..d."""


def frobenius(m: np.ndarray) -> float:
    return float(np.linalg.norm(m))


def is_hermitian(m: np.ndarray, tol: float = 1e-10) -> bool:
    """Check ||M - M^dag||_F <= tol * d."""
    m = np.asarray(m)
    return frobenius(m - m.conj().T) <= tol * m.shape[0]


def is_unitary(m: np.ndarray, tol: float = 1e-10) -> bool:
    """Check ||M^dag M - I||_F <= tol * d."""
    m = np.asarray(m)
    d = m.shape[0]
    return frobenius(m.conj().T @ m - np.eye(d)) <= tol * d


def check_state(psi: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """Validate a unit-norm complex vector and return it as complex128."""
    psi = np.asarray(psi, dtype=complex)
    if psi.ndim != 1 or psi.size < 1:
        raise ValueError("state must be a nonempty 1-D vector")
    if not (np.all(np.isfinite(psi.real)) and np.all(np.isfinite(psi.imag))):
        raise ValueError("state contains non-finite entries")
    if abs(np.linalg.norm(psi) - 1.0) > tol:
        raise ValueError("state is not normalized")
    return psi


def check_density(rho: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """Validate Hermiticity, positivity and unit trace of a density matrix."""
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError("density matrix must be square")
    if frobenius(rho - rho.conj().T) > tol * rho.shape[0]:
        raise NotHermitianError("density matrix is not Hermitian")
    if abs(np.trace(rho).real - 1.0) > tol:
        raise ValueError("density matrix trace differs from 1")
    if np.linalg.eigvalsh(rho).min() < -tol:
        raise ValueError("density matrix has a negative eigenvalue")
    return rho


class EigenDecomposition(NamedTuple):
    """Eigenvalues ascending; eigenvectors as orthonormal columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def _phase_normalize(vectors: np.ndarray, threshold: float = 1e-8) -> np.ndarray:
    """Rotate each column so its first component above threshold is real positive."""
    out = vectors.copy()
    d, n = out.shape
    for k in range(n):
        col = out[:, k]
        for i in range(d):
            a = col[i]
            if abs(a) > threshold:
                col *= np.conj(a) / abs(a)
                break
    return out


def eig_hermitian(
    h: np.ndarray,
    off_target: float = 1e-12,
    max_sweeps: int = 100,
    herm_tol: float = 1e-10,
) -> EigenDecomposition:
    """Diagonalize a Hermitian matrix with cyclic complex Jacobi rotations.

    The sweep order is fixed (row-major over the strict upper triangle), so
    identical inputs produce bit-identical output. Eigenvalues are returned
    ascending; each eigenvector's first component above 1e-8 in modulus is
    normalized to be real positive, which pins the phase deterministically
    even in (near-)degenerate subspaces.

    Raises NotHermitianError when ||H - H^dag||_F > herm_tol * d, and
    NoConvergenceError when max_sweeps cyclic sweeps do not push the
    off-diagonal Frobenius mass below off_target * ||H||_F.
    """
    h = np.asarray(h, dtype=complex)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise ValueError("matrix must be square")
    d = h.shape[0]
    if d > 512:
        raise ValueError("dimension above the supported maximum of 512")
    if not is_hermitian(h, herm_tol):
        raise NotHermitianError("matrix fails the Hermitian symmetry check")

    a = 0.5 * (h + h.conj().T)  # exact symmetrization kills round-off drift
    x = np.eye(d, dtype=complex)
    scale = frobenius(a)
    if d == 1 or scale == 0.0:
        vals = np.diag(a).real.copy()
        return EigenDecomposition(vals, x)

    # Skipping rotations below this threshold still guarantees the target:
    # d^2 entries of size thr sum to (off_target * scale)^2 in Frobenius mass.
    thr = off_target * scale / d
    converged = False
    for _ in range(max_sweeps):
        rotated = False
        for p in range(d - 1):
            for q in range(p + 1, d):
                apq = a[p, q]
                r = abs(apq)
                if r <= thr:
                    continue
                rotated = True
                phase = apq / r
                tau = (a[q, q].real - a[p, p].real) / (2.0 * r)
                t = np.sign(tau) / (abs(tau) + np.hypot(1.0, tau)) if tau != 0.0 else 1.0
                c = 1.0 / np.hypot(1.0, t)
                s = t * c
                sp = s * np.conj(phase)
                # columns: A <- A R, R = [[c, s], [-s e^{-ib}, c e^{-ib}]]
                # on the (p, q) plane, with e^{ib} the phase of A[p, q]
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - sp * col_q
                a[:, q] = s * col_p + c * np.conj(phase) * col_q
                # rows: A <- R^dag A
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * phase * row_q
                a[q, :] = s * row_p + c * phase * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                # accumulate eigenvectors
                xcol_p = x[:, p].copy()
                xcol_q = x[:, q].copy()
                x[:, p] = c * xcol_p - sp * xcol_q
                x[:, q] = s * xcol_p + c * np.conj(phase) * xcol_q
        if not rotated:
            converged = True
            break
        off = np.sqrt(max(frobenius(a) ** 2 - np.sum(np.diag(a).real ** 2), 0.0))
        if off <= off_target * scale:
            converged = True
            break
    if not converged:
        raise NoConvergenceError(f"no convergence after {max_sweeps} sweeps")

    vals = np.diag(a).real.copy()
    order = np.argsort(vals, kind="stable")
    return EigenDecomposition(vals[order], _phase_normalize(x[:, order]))


def haar_random_state(dim: int, seed: int) -> np.ndarray:
    """Draw a Haar-distributed pure state, deterministic per (dim, seed)."""
    if dim < 1:
        raise ValueError("dimension must be at least 1")
    rng = np.random.default_rng(seed)
    z = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return z / np.linalg.norm(z)


def random_perp(psi: np.ndarray, seed: int) -> np.ndarray:
    """Haar sample projected orthogonal to psi and renormalized.

    Resamples (advancing the seed) on the measure-zero event that the
    projected residual is numerically null.
    """
    psi = check_state(psi)
    d = psi.size
    if d < 2:
        raise DimensionTooSmallError("no orthogonal complement in dimension 1")
    for attempt in range(64):
        phi = haar_random_state(d, seed + attempt)
        phi = phi - psi * np.vdot(psi, phi)
        nrm = np.linalg.norm(phi)
        if nrm > 1e-8:
            phi = phi / nrm
            # one re-projection pass keeps the overlap at the 1e-12 contract
            phi = phi - psi * np.vdot(psi, phi)
            return phi / np.linalg.norm(phi)
    raise RuntimeError("could not find an orthogonal direction")  # pragma: no cover


def random_density(dim: int, rank: int, seed: int) -> np.ndarray:
    """Random rank-r mixture of Haar pure states with Dirichlet-uniform weights."""
    if dim < 1:
        raise ValueError("dimension must be at least 1")
    if not 1 <= rank <= dim:
        raise BadRankError(f"rank {rank} outside 1..{dim}")
    rng = np.random.default_rng(seed)
    weights = rng.dirichlet(np.ones(rank))
    rho = np.zeros((dim, dim), dtype=complex)
    for i in range(rank):
        z = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        z /= np.linalg.norm(z)
        rho += weights[i] * np.outer(z, z.conj())
    return 0.5 * (rho + rho.conj().T)
