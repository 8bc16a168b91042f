"""Minimum-uncertainty states: Harper ground states, critical-state residuals,
phase realignment by translations, and the per-dimension summary table."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .bounds import evaluate_all
from .linalg import eig_hermitian
from .operators import WeylPair, clock_shift_pair, harper, translation
from .uncertainty import expectation, variance

VARIANCE_EPS = 1e-10


class DegenerateVarianceError(ValueError):
    """A variance in a denominator is numerically zero (eigenstate input)."""


class HarperGround(NamedTuple):
    state: np.ndarray
    du2: float
    dv2: float
    energy: float
    gap: float


def harper_ground(pair: WeylPair) -> HarperGround:
    """Ground state of -(U + U^dag)/2 - (V + V^dag)/2 with its variances."""
    decomp = eig_hermitian(harper(pair))
    psi = decomp.eigenvectors[:, 0]
    gap = float(decomp.eigenvalues[1] - decomp.eigenvalues[0]) if pair.dim > 1 else 0.0
    return HarperGround(
        state=psi,
        du2=variance(psi, pair.u),
        dv2=variance(psi, pair.v),
        energy=float(decomp.eigenvalues[0]),
        gap=gap,
    )


def critical_residual(psi: np.ndarray, u: np.ndarray, v: np.ndarray) -> float:
    """Self-consistency residual of the two-operator stationarity equation.

    Builds L = [ (1 - (<U> U^dag + <U^dag> U)/2) / dU^2
               + (1 - (<V> V^dag + <V^dag> V)/2) / dV^2 ] / 2
    with all expectations taken on psi, and returns ||L psi - psi||. Critical
    states (stationary points of the variance product) make this vanish.
    """
    psi = np.asarray(psi, dtype=complex)
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    du2 = variance(psi, u)
    dv2 = variance(psi, v)
    if du2 <= VARIANCE_EPS or dv2 <= VARIANCE_EPS:
        raise DegenerateVarianceError("stationarity equation divides by a zero variance")
    eu = expectation(psi, u)
    ev = expectation(psi, v)
    d = psi.shape[0]
    eye = np.eye(d)
    term_u = (eye - 0.5 * (eu * u.conj().T + np.conj(eu) * u)) / du2
    term_v = (eye - 0.5 * (ev * v.conj().T + np.conj(ev) * v)) / dv2
    lhs = 0.5 * (term_u + term_v) @ psi
    return float(np.linalg.norm(lhs - psi))


class Realignment(NamedTuple):
    state: np.ndarray
    a: int
    b: int
    aligned: bool


def realign_phases(psi: np.ndarray, pair: WeylPair, imag_tol: float = 1e-6) -> Realignment:
    """Translate psi so that <U> and <V> become real, when the grid allows it.

    Under psi -> U^a V^{-b} psi the expectations pick up pure phases,
    <U> -> e^{-i b phase} <U> and <V> -> e^{-i a phase} <V>, so the search
    scans the d x d grid of scalar phase rotations for the maximum of
    Re<U> + Re<V> and applies the single winning translation. Variances are
    untouched. `aligned` reports whether the residual imaginary parts meet
    imag_tol; when they cannot (the phase of <U> is off-grid) the best
    candidate is still returned.
    """
    psi = np.asarray(psi, dtype=complex)
    d = pair.dim
    eu = expectation(psi, pair.u)
    ev = expectation(psi, pair.v)
    steps = np.exp(-1j * pair.phase * np.arange(d))
    re_u = (steps * eu).real  # indexed by b
    re_v = (steps * ev).real  # indexed by a
    objective = re_v[:, None] + re_u[None, :]
    a_idx, b_idx = np.unravel_index(int(np.argmax(objective)), objective.shape)
    a_idx, b_idx = int(a_idx), int(b_idx)
    if a_idx == 0 and b_idx == 0:
        out = psi
    else:
        out = translation(pair, a_idx, b_idx) @ psi
    eu_new = expectation(out, pair.u)
    ev_new = expectation(out, pair.v)
    aligned = abs(eu_new.imag) + abs(ev_new.imag) <= imag_tol
    return Realignment(state=out, a=a_idx, b=b_idx, aligned=aligned)


def squeezing_theta(du2: float, dv2: float) -> float:
    """Squeezing angle atan2(C2, C1) with C1 = dv2 sqrt(1-du2), C2 = du2 sqrt(1-dv2).

    Equal variances give pi/4 (coherent point); du2 = 0 gives 0 and dv2 = 0
    gives pi/2 (all weight on the sharp operator's cosine).
    """
    c1 = dv2 * np.sqrt(max(1.0 - du2, 0.0))
    c2 = du2 * np.sqrt(max(1.0 - dv2, 0.0))
    return float(np.arctan2(c2, c1))


class TiltedResiduals(NamedTuple):
    printed: float
    swapped: float


def tilted_stationarity_check(psi: np.ndarray, pair: WeylPair) -> TiltedResiduals:
    """Residuals of the tilted eigenvalue equation in both coefficient pairings.

    The operator side is cos(theta) C_U~ + sin(theta) C_V~ with the tilde
    phases taken from arg<U>, arg<V> on psi. The `printed` eigenvalue pairs
    cos(theta) with |<V>| and sin(theta) with |<U>|; `swapped` pairs them
    the other way (the form the stationarity reduction itself produces).
    Both coincide when du2 = dv2.
    """
    psi = np.asarray(psi, dtype=complex)
    du2 = variance(psi, pair.u)
    dv2 = variance(psi, pair.v)
    if du2 <= VARIANCE_EPS or dv2 <= VARIANCE_EPS:
        raise DegenerateVarianceError("tilted equation divides by a zero variance")
    eu = expectation(psi, pair.u)
    ev = expectation(psi, pair.v)
    ut = np.exp(-1j * np.angle(eu)) * pair.u
    vt = np.exp(-1j * np.angle(ev)) * pair.v
    c_ut = 0.5 * (ut + ut.conj().T)
    c_vt = 0.5 * (vt + vt.conj().T)
    theta = squeezing_theta(du2, dv2)
    lhs = (np.cos(theta) * c_ut + np.sin(theta) * c_vt) @ psi
    printed = np.cos(theta) * abs(ev) + np.sin(theta) * abs(eu)
    swapped = np.cos(theta) * abs(eu) + np.sin(theta) * abs(ev)
    return TiltedResiduals(
        printed=float(np.linalg.norm(lhs - printed * psi)),
        swapped=float(np.linalg.norm(lhs - swapped * psi)),
    )


@dataclass(frozen=True)
class MusRecord:
    """One row of the per-dimension minimum-uncertainty summary.

    Bound columns are half the lower bound on du2 + dv2, the convention that
    makes them directly comparable to delta_u2 under the du2 = dv2 symmetry.
    """

    d: int
    delta_u2: float
    delta_v2: float
    ur1_half: float
    ur2_half: float
    ur3_half: float
    ground_energy: float
    residual: float
    realignment: tuple[int, int]
    spectral_gap: float


def mus_record(d: int) -> MusRecord:
    """Harper-ground evaluation at one dimension for the clock/shift pair."""
    pair = clock_shift_pair(d)
    ground = harper_ground(pair)
    re = realign_phases(ground.state, pair)
    psi = re.state
    residual = critical_residual(psi, pair.u, pair.v)
    report = evaluate_all(psi, pair.u, pair.v, ur2_strategy="optimal")
    return MusRecord(
        d=d,
        delta_u2=report.du2,
        delta_v2=report.dv2,
        ur1_half=0.5 * report.ur1,
        ur2_half=0.5 * report.ur2,
        ur3_half=0.5 * report.ur3,
        ground_energy=ground.energy,
        residual=residual,
        realignment=(re.a, re.b),
        spectral_gap=ground.gap,
    )


def mus_table(d_min: int, d_max: int) -> list[MusRecord]:
    """MusRecord rows for every dimension in [d_min, d_max]."""
    if d_min < 2 or d_max < d_min:
        raise ValueError("need 2 <= d_min <= d_max")
    return [mus_record(d) for d in range(d_min, d_max + 1)]
