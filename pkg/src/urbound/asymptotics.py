"""High-dimension limit machinery: Hermitian generators of unitaries,
localization windows, centering translations, and the limit checks that
connect the unitary bounds to their Hermitian counterparts."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
import scipy.linalg

from .bounds import ur1
from .mus import DegenerateVarianceError, harper_ground, realign_phases
from .operators import WeylPair, clock_shift_pair, dft, index_range
from .uncertainty import expectation, variance

BRANCH_EPS = 1e-9


class NotNormalError(ValueError):
    """Matrix is not normal (or not unitary), so eigenphases are undefined."""


def generator(u: np.ndarray) -> np.ndarray:
    """Hermitian generator g with U = exp(i sqrt(2 pi / d) g).

    Eigenphases are taken on the principal branch (-pi, pi]. Eigenvalues
    within 1e-9 below the cut are folded onto +pi: the -1 eigenvalue of
    even-dimension clocks and shifts lands there through round-off, and
    either branch reconstructs U exactly.
    """
    u = np.asarray(u, dtype=complex)
    d = u.shape[0]
    t, q = scipy.linalg.schur(u, output="complex")
    diag = np.diag(t)
    if np.linalg.norm(t - np.diag(diag)) > 1e-10 * d:
        raise NotNormalError("matrix is not normal to working precision")
    if np.max(np.abs(np.abs(diag) - 1.0)) > 1e-10:
        raise NotNormalError("matrix is not unitary to working precision")
    phases = np.angle(diag)
    phases[phases < -np.pi + BRANCH_EPS] = np.pi
    g = (q * (phases * np.sqrt(d / (2.0 * np.pi)))) @ q.conj().T
    g = 0.5 * (g + g.conj().T)
    rebuilt = (q * np.exp(1j * phases)) @ q.conj().T
    if np.linalg.norm(rebuilt - u) > 1e-10 * d:
        raise NotNormalError("eigenphase reconstruction failed")  # pragma: no cover
    return g


def window_slots(d: int, delta: float) -> np.ndarray:
    """Storage slots of the central window |j| <= (2/pi) floor(d/2) delta."""
    labels = index_range(d)
    cut = (2.0 / np.pi) * (d // 2) * delta
    return np.flatnonzero(np.abs(labels) <= cut)


@dataclass(frozen=True)
class MembershipReport:
    """Localization of a state on the central index window."""

    d: int
    delta: float
    epsilon: float
    expectation: float
    member: bool
    variance_bound: float


def pdelta_membership(
    psi: np.ndarray,
    delta: float,
    basis: str = "computational",
    epsilon: float | None = None,
) -> MembershipReport:
    """Window expectation <psi|P_delta|psi> and the membership verdict.

    basis "computational" reads amplitudes directly (clock eigenbasis);
    "fourier" reads them in the shift eigenbasis. With epsilon given the
    verdict is expectation > 1 - epsilon; without it epsilon is measured
    as 1 - expectation (so the state is a member at its own epsilon).
    """
    psi = np.asarray(psi, dtype=complex)
    d = psi.shape[0]
    if delta <= 0.0:
        raise ValueError("delta must be positive")
    if basis == "computational":
        amps = psi
    elif basis == "fourier":
        amps = dft(d).conj().T @ psi
    else:
        raise ValueError(f"unknown basis: {basis!r}")
    weight = float(np.sum(np.abs(amps[window_slots(d, delta)]) ** 2))
    if epsilon is None:
        epsilon = max(1.0 - weight, 0.0)
        member = True
    else:
        member = weight > 1.0 - epsilon
    return MembershipReport(
        d=d,
        delta=delta,
        epsilon=float(epsilon),
        expectation=weight,
        member=member,
        variance_bound=0.5 * delta * delta + 2.0 * epsilon,
    )


class Lemma1Result(NamedTuple):
    member: bool
    holds: bool | None
    margin: float | None
    variance: float
    bound: float


def lemma1_check(
    psi: np.ndarray,
    delta: float,
    epsilon: float,
    u: np.ndarray,
    basis: str = "computational",
) -> Lemma1Result:
    """Check variance(psi, U) <= delta^2/2 + 2 epsilon for window members.

    Non-members make the implication vacuous: holds and margin are None.
    """
    report = pdelta_membership(psi, delta, basis=basis, epsilon=epsilon)
    var = variance(psi, u)
    if not report.member:
        return Lemma1Result(False, None, None, var, report.variance_bound)
    margin = report.variance_bound - var
    return Lemma1Result(True, margin >= -1e-12, margin, var, report.variance_bound)


class CenterResult(NamedTuple):
    k: int
    state: np.ndarray
    epsilon: float
    epsilon_bound: float
    found: bool


def center_translation(psi: np.ndarray, delta: float, pair: WeylPair) -> CenterResult:
    """Shift-power V^k that best localizes psi on the central window.

    Scans all k, keeping the smallest measured epsilon = 1 - window weight,
    and reports it next to the guaranteed bound
    (variance + pi^2/d^2) / sin^2(delta/2); `found` is False when even the
    best k misses that guarantee (a counter-instance worth investigating,
    not an error).
    """
    psi = np.asarray(psi, dtype=complex)
    d = pair.dim
    du2 = variance(psi, pair.u)
    bound = (du2 + np.pi**2 / d**2) / np.sin(0.5 * delta) ** 2
    slots = window_slots(d, delta)
    best_k = 0
    best_eps = np.inf
    current = psi
    for k in range(d):
        eps = 1.0 - float(np.sum(np.abs(current[slots]) ** 2))
        if eps < best_eps - 1e-15:
            best_k, best_eps = k, eps
        current = pair.v @ current
    state = psi if best_k == 0 else np.linalg.matrix_power(pair.v, best_k) @ psi
    return CenterResult(
        k=best_k,
        state=state,
        epsilon=max(best_eps, 0.0),
        epsilon_bound=float(bound),
        found=best_eps <= bound + 1e-12,
    )


def hermitian_variance(psi: np.ndarray, h: np.ndarray) -> float:
    """<h^2> - <h>^2 for a Hermitian operator."""
    mean = expectation(psi, h).real
    return expectation(psi, h @ h).real - mean * mean


def hermitian_mp_bound(
    psi: np.ndarray, u: np.ndarray, v: np.ndarray, sign: int
) -> tuple[float, float]:
    """Stronger Hermitian-pair relation with the optimal orthogonal state.

    Returns (lhs, rhs) where lhs = var(u) + var(v) and, for s = sign,
    rhs = ||(1 - |psi><psi|)(u + s i v) psi||^2 + s Im<[u, v]>; the
    projection maximizes the free matrix element, and lhs >= rhs holds for
    either sign.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    psi = np.asarray(psi, dtype=complex)
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    lhs = hermitian_variance(psi, u) + hermitian_variance(psi, v)
    w = (u + sign * 1j * v) @ psi
    w = w - psi * np.vdot(psi, w)
    comm = expectation(psi, u @ v - v @ u)
    rhs = float(np.linalg.norm(w) ** 2) + sign * comm.imag
    return lhs, rhs


def mus_limit_residual(psi: np.ndarray, u: np.ndarray, v: np.ndarray) -> float:
    """Residual of the Hermitian stationarity equation on psi.

    || (1/2) [ (u - <u>)^2 / var(u) + (v - <v>)^2 / var(v) ] psi - psi ||;
    small exactly when psi approaches the Gaussian-like ground profile.
    """
    psi = np.asarray(psi, dtype=complex)
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    var_u = hermitian_variance(psi, u)
    var_v = hermitian_variance(psi, v)
    if var_u <= 1e-10 or var_v <= 1e-10:
        raise DegenerateVarianceError("limit equation divides by a zero variance")
    d = psi.shape[0]
    ubar = u - expectation(psi, u).real * np.eye(d)
    vbar = v - expectation(psi, v).real * np.eye(d)
    op = 0.5 * ((ubar @ ubar) / var_u + (vbar @ vbar) / var_v)
    return float(np.linalg.norm(op @ psi - psi))


@dataclass(frozen=True)
class AsymptoticGap:
    """Unitary-vs-Hermitian comparison at one dimension."""

    d: int
    family: str
    sum: float
    hermitian_scaled_sum: float
    ur1: float
    rel_gap_hermitian: float
    rel_gap_ur1: float
    eq_limit_residual: float


def _sweep_state(d: int, theta: float) -> np.ndarray:
    """cos(theta) on the j=0 slot, -sin(theta) on the j=-1 slot."""
    psi = np.zeros(d, dtype=complex)
    psi[d // 2] = np.cos(theta)
    psi[d // 2 - 1] = -np.sin(theta)
    return psi


def asymptotic_gap(d: int, family: str = "harper-ground", theta: float | None = None) -> AsymptoticGap:
    """Relative gaps between the unitary sum, its Hermitian scaling, and ur1.

    family "harper-ground" evaluates on the realigned Harper ground state;
    "theta-sweep" evaluates on the two-component sweep state at the given
    theta.
    """
    pair = clock_shift_pair(d)
    if family == "harper-ground":
        psi = realign_phases(harper_ground(pair).state, pair).state
    elif family == "theta-sweep":
        if theta is None:
            raise ValueError("theta-sweep family needs theta")
        psi = _sweep_state(d, theta)
    else:
        raise ValueError(f"unknown family: {family!r}")
    gen_u = generator(pair.u)
    gen_v = generator(pair.v)
    total = variance(psi, pair.u) + variance(psi, pair.v)
    scaled = (2.0 * np.pi / d) * (
        hermitian_variance(psi, gen_u) + hermitian_variance(psi, gen_v)
    )
    bound = ur1(psi, pair.u, pair.v)
    residual = mus_limit_residual(psi, gen_u, gen_v)
    return AsymptoticGap(
        d=d,
        family=family,
        sum=total,
        hermitian_scaled_sum=scaled,
        ur1=bound,
        rel_gap_hermitian=abs(total - scaled) / total,
        rel_gap_ur1=(total - bound) / total,
        eq_limit_residual=residual,
    )
