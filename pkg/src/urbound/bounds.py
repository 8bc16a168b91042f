"""Lower bounds on the uncertainty sum of two unitary operators.

Every bound function returns the lower-bound value on
variance(state, U) + variance(state, V); callers compare against the sum
themselves or use evaluate_all, which also checks validity.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .linalg import random_perp
from .operators import PAULI, NotWeylPairError, commutation_phase
from .uncertainty import bargmann3, covariance, expectation, variance

DENOM_EPS = 1e-12


class DegenerateDenominatorError(ZeroDivisionError):
    """Bound formula divides by a numerically vanishing denominator."""


class NotOrthogonalError(ValueError):
    """Supplied auxiliary state is not orthogonal to the main state."""


class DegeneratePerpError(ValueError):
    """Both sign branches leave no orthogonal component to project onto."""


class ParallelDirectionsError(ValueError):
    """Direction vectors are (anti)parallel, so the construction is singular."""


class BoundViolationError(AssertionError):
    """A lower bound exceeded the uncertainty sum beyond tolerance."""


def ur1(state: np.ndarray, u: np.ndarray, v: np.ndarray) -> float:
    """Bargmann-invariant bound, valid for pure and mixed states.

    Pure states: 1 + |<U^dag V>|^2 - 2 cos(phase) |B| with B the three-point
    Bargmann invariant; an undefined phase (|B| at numerical zero)
    contributes nothing. Mixed states: the same expression with the cross
    term written out as <U^dag V><U><V^dag> + conjugate, whose imaginary
    residue is checked below 1e-10 and dropped.
    """
    state = np.asarray(state, dtype=complex)
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    g2 = abs(expectation(state, u.conj().T @ v)) ** 2
    if state.ndim == 1:
        triple = bargmann3(state, u, v)
        cross = 2.0 * triple.value.real if triple.phase_defined else 0.0
        return 1.0 + g2 - cross
    t1 = expectation(state, u.conj().T @ v) * expectation(state, u) * expectation(
        state, v.conj().T
    )
    t2 = expectation(state, v.conj().T @ u) * expectation(state, v) * expectation(
        state, u.conj().T
    )
    if abs((t1 + t2).imag) > 1e-10:
        raise ArithmeticError("cross term acquired a non-real residue")
    return 1.0 + g2 - (t1 + t2).real


def ur1_weak_cos(psi: np.ndarray, u: np.ndarray, v: np.ndarray) -> float:
    """Weakened form 1 + (g^2 - g|cos|) / (1 - g|cos|), g = |<U^dag V>|."""
    psi = np.asarray(psi, dtype=complex)
    g = abs(expectation(psi, np.asarray(u).conj().T @ np.asarray(v)))
    triple = bargmann3(psi, u, v)
    abs_cos = abs(np.cos(triple.phase)) if triple.phase_defined else 0.0
    denom = 1.0 - g * abs_cos
    if denom <= DENOM_EPS:
        raise DegenerateDenominatorError("1 - g |cos| vanished")
    return 1.0 + (g * g - g * abs_cos) / denom


def ur1_weak_mod(state: np.ndarray, u: np.ndarray, v: np.ndarray) -> float:
    """Modulus-only form 1 - |<U^dag V>|; valid for pure and mixed states."""
    return 1.0 - abs(expectation(state, np.asarray(u).conj().T @ np.asarray(v)))


def ur1_phase_form(psi: np.ndarray, u: np.ndarray, v: np.ndarray) -> float:
    """Phase form 2 - D / (1 - sqrt(1 - D) |cos|) with D = variance of U^dag V.

    Algebraically identical to ur1_weak_cos (substitute g = sqrt(1 - D));
    kept as an independent route so the identity is testable.
    """
    psi = np.asarray(psi, dtype=complex)
    duv2 = variance(psi, np.asarray(u).conj().T @ np.asarray(v))
    triple = bargmann3(psi, u, v)
    abs_cos = abs(np.cos(triple.phase)) if triple.phase_defined else 0.0
    denom = 1.0 - np.sqrt(max(1.0 - duv2, 0.0)) * abs_cos
    if denom <= DENOM_EPS:
        raise DegenerateDenominatorError("1 - sqrt(1 - D) |cos| vanished")
    return 2.0 - duv2 / denom


def ur2(psi: np.ndarray, u: np.ndarray, v: np.ndarray, perp: np.ndarray, sign: int) -> float:
    """|<psi| U^dag + s i V^dag |perp>|^2 - 2 s Im Cov(U, V) for s = sign."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    psi = np.asarray(psi, dtype=complex)
    perp = np.asarray(perp, dtype=complex)
    if abs(np.vdot(psi, perp)) > 1e-10:
        raise NotOrthogonalError("perp state is not orthogonal to psi")
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    op = u.conj().T + sign * 1j * v.conj().T
    elem = np.vdot(psi, op @ perp)
    return abs(elem) ** 2 - 2.0 * sign * covariance(psi, u, v).imag


def ur2_best(
    psi: np.ndarray, u: np.ndarray, v: np.ndarray
) -> tuple[float, np.ndarray | None, int]:
    """Maximize the ur2 bound over the free perpendicular state and sign.

    For sign s the matrix element is maximized by the normalized projection
    of (U - s i V)|psi> orthogonal to psi; the better of the two signs is
    returned. When a projection vanishes (psi an eigenvector of U - s i V)
    that branch keeps only its covariance term, and if both vanish the
    returned perp is None.
    """
    psi = np.asarray(psi, dtype=complex)
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    im_cov = covariance(psi, u, v).imag
    best: tuple[float, np.ndarray | None, int] | None = None
    for sign in (1, -1):
        w = (u - sign * 1j * v) @ psi
        w = w - psi * np.vdot(psi, w)
        nrm = np.linalg.norm(w)
        if nrm > 1e-12:
            value = float(nrm**2) - 2.0 * sign * im_cov
            cand = (value, w / nrm, sign)
        else:
            cand = (-2.0 * sign * im_cov, None, sign)
        if best is None or cand[0] > best[0]:
            best = cand
    return best


def ur2_sampled(
    psi: np.ndarray, u: np.ndarray, v: np.ndarray, samples: int, seed: int
) -> tuple[float, int]:
    """Best ur2 value over `samples` random perpendicular states and both signs."""
    if samples < 1:
        raise ValueError("need at least one sample")
    best_val = -np.inf
    best_sign = 1
    for k in range(samples):
        perp = random_perp(psi, seed + k)
        for sign in (1, -1):
            val = ur2(psi, u, v, perp, sign)
            if val > best_val:
                best_val, best_sign = val, sign
    return float(best_val), best_sign


def _perp_norm_sq(psi: np.ndarray, op: np.ndarray) -> float:
    """Squared norm of the component of op|psi> orthogonal to psi."""
    w = op @ psi
    w = w - psi * np.vdot(psi, w)
    return float(np.linalg.norm(w) ** 2)


def ur3(psi: np.ndarray, u: np.ndarray, v: np.ndarray) -> float:
    """Parallelogram bound: half the larger orthogonal mass of (U +/- V)|psi>.

    Each branch equals the squared deviation of the non-Hermitian Vaidman
    decomposition of (U +/- V)|psi>; an eigenvector branch contributes 0.
    """
    psi = np.asarray(psi, dtype=complex)
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    return 0.5 * max(_perp_norm_sq(psi, u + v), _perp_norm_sq(psi, u - v))


def _unit3(vec) -> np.ndarray:
    vec = np.asarray(vec, dtype=float)
    if abs(np.linalg.norm(vec) - 1.0) > 1e-12:
        raise ValueError("direction vector is not unit length")
    return vec


def pauli_bound(rho: np.ndarray, a, b) -> tuple[float, float]:
    """State-dependent and state-independent bounds for a pair of Pauli axes.

    Returns (state_dep, state_indep) where state_dep adds the Bloch-vector
    term ((a x b) . r)^2 that state_indep drops; state_dep >= state_indep.
    """
    a = _unit3(a)
    b = _unit3(b)
    rho = np.asarray(rho, dtype=complex)
    r = np.array([expectation(rho, s).real for s in PAULI])
    su = a[0] * PAULI[0] + a[1] * PAULI[1] + a[2] * PAULI[2]
    sv = b[0] * PAULI[0] + b[1] * PAULI[1] + b[2] * PAULI[2]
    du2 = variance(rho, su)
    dv2 = variance(rho, sv)
    ab = abs(float(np.dot(a, b)))
    base = 1.0 + ab * ab - 2.0 * ab * np.sqrt(max((1.0 - du2) * (1.0 - dv2), 0.0))
    cross = float(np.dot(np.cross(a, b), r)) ** 2
    return base + cross, base


def _unit_vec(vec, length: int) -> np.ndarray:
    vec = np.asarray(vec, dtype=float)
    if vec.shape != (length,):
        raise ValueError(f"direction vector must have length {length}")
    if abs(np.linalg.norm(vec) - 1.0) > 1e-12:
        raise ValueError("direction vector is not unit length")
    return vec


def gamma_bound(rho: np.ndarray, a, b, gammas) -> float:
    """Bound for anticommuting observables a.Gamma and b.Gamma."""
    a = _unit_vec(a, len(gammas))
    b = _unit_vec(b, len(gammas))
    ga = sum(a[i] * gammas[i] for i in range(len(gammas)))
    gb = sum(b[i] * gammas[i] for i in range(len(gammas)))
    da2 = variance(rho, ga)
    db2 = variance(rho, gb)
    ab = abs(float(np.dot(a, b)))
    return 1.0 + ab * ab - 2.0 * ab * np.sqrt(max((1.0 - da2) * (1.0 - db2), 0.0))


def gamma_saturating_state(a, b, var_a: float, gammas, branch: int = 1) -> np.ndarray:
    """Density matrix (I + g . Gamma)/d achieving equality in gamma_bound.

    g combines sqrt(1 - var_a) a with the component of b orthogonal to a,
    weighted so that ||g|| = 1; the weight uses var_a^(1/2) over
    sqrt(1 - (a.b)^2), and branch (+1 or -1) together with tau = sgn(a.b)
    selects the side. Equality holds on the branch = +1 side.
    """
    a = _unit_vec(a, len(gammas))
    b = _unit_vec(b, len(gammas))
    if branch not in (1, -1):
        raise ValueError("branch must be +1 or -1")
    if not 0.0 <= var_a <= 1.0:
        raise ValueError("var_a must lie in [0, 1]")
    ab = float(np.dot(a, b))
    if abs(abs(ab) - 1.0) <= 1e-12:
        raise ParallelDirectionsError("directions are (anti)parallel")
    tau = 1.0 if ab >= 0.0 else -1.0
    coef = branch * tau * np.sqrt(var_a) / np.sqrt(1.0 - ab * ab)
    g = np.sqrt(1.0 - var_a) * a + coef * (b - ab * a)
    g = g / np.linalg.norm(g)
    d = gammas[0].shape[0]
    rho = np.eye(d, dtype=complex)
    for i in range(len(gammas)):
        rho = rho + g[i] * gammas[i]
    return rho / d


def ms_relation_check(du2: float, dv2: float, phi_w: float) -> float:
    """Signed residual of the Weyl-pair product relation; >= 0 when satisfied.

    With A = tan(phi_w / 2): (1 + 2A) du2 dv2 + A^2 (du2 + dv2) - A^2.
    At phi_w = pi the A -> inf limit divides through by A^2, leaving
    du2 + dv2 - 1. Requires 0 <= phi_w <= pi; for a pair stored with the
    conjugate phase in (pi, 2 pi), pass 2 pi minus it (equivalently swap U, V).
    """
    if not 0.0 <= phi_w <= np.pi + 1e-12:
        raise ValueError("commutation phase must lie in [0, pi]")
    if abs(phi_w - np.pi) <= 1e-9:
        return du2 + dv2 - 1.0
    big_a = np.tan(0.5 * phi_w)
    return (1.0 + 2.0 * big_a) * du2 * dv2 + big_a**2 * (du2 + dv2 - 1.0)


def ms_sum_bound(phi_w: float) -> float:
    """Sum-type bound 2 x* at the symmetric saturation point du2 = dv2 = x*.

    x* = A / (1 + 2A) is the positive root of (1+2A) x^2 + 2 A^2 x - A^2,
    with x* -> 1/2 as phi_w -> pi; commuting operators (phi_w = 0) give 0.
    """
    if not 0.0 <= phi_w <= np.pi + 1e-12:
        raise ValueError("commutation phase must lie in [0, pi]")
    if abs(phi_w - np.pi) <= 1e-9:
        return 1.0
    big_a = np.tan(0.5 * phi_w)
    return 2.0 * big_a / (1.0 + 2.0 * big_a)


@dataclass(frozen=True)
class BoundReport:
    """All bound values for one (state, U, V) evaluation, plus diagnostics."""

    dim: int
    du2: float
    dv2: float
    sum: float
    ur1: float
    ur1_weak_cos: float | None
    ur1_weak_mod: float
    ur1_phase_form: float | None
    ur2: float
    ur2_strategy: str
    ur2_sign: int
    ur3: float
    ms_sum: float | None
    cos_phi3: float | None
    slacks: dict = field(default_factory=dict)


def evaluate_all(
    psi: np.ndarray,
    u: np.ndarray,
    v: np.ndarray,
    ur2_strategy: str = "optimal",
    perp_samples: int = 20,
    seed: int = 0,
    perp: np.ndarray | None = None,
    sign: int | None = None,
    slack_tol: float = 1e-10,
) -> BoundReport:
    """Evaluate every bound on a pure state and assert validity.

    ur2_strategy selects how the free perpendicular state is chosen:
    "optimal" (projection maximizer), "sampled" (best of perp_samples
    seeded random draws), or "explicit" (caller-supplied perp and sign).
    Raises BoundViolationError if any bound exceeds the sum by more than
    slack_tol.
    """
    psi = np.asarray(psi, dtype=complex)
    du2 = variance(psi, u)
    dv2 = variance(psi, v)
    total = du2 + dv2

    triple = bargmann3(psi, u, v)
    cos_phi3 = float(np.cos(triple.phase)) if triple.phase_defined else None

    values: dict[str, float | None] = {}
    values["ur1"] = ur1(psi, u, v)
    try:
        values["ur1_weak_cos"] = ur1_weak_cos(psi, u, v)
    except DegenerateDenominatorError:
        values["ur1_weak_cos"] = None
    values["ur1_weak_mod"] = ur1_weak_mod(psi, u, v)
    try:
        values["ur1_phase_form"] = ur1_phase_form(psi, u, v)
    except DegenerateDenominatorError:
        values["ur1_phase_form"] = None

    if ur2_strategy == "optimal":
        ur2_val, _, ur2_sign = ur2_best(psi, u, v)
        strategy_tag = "optimal"
    elif ur2_strategy == "sampled":
        ur2_val, ur2_sign = ur2_sampled(psi, u, v, perp_samples, seed)
        strategy_tag = f"sampled({perp_samples},seed={seed})"
    elif ur2_strategy == "explicit":
        if perp is None or sign is None:
            raise ValueError("explicit strategy needs perp and sign")
        ur2_val = ur2(psi, u, v, perp, sign)
        ur2_sign = sign
        strategy_tag = "explicit"
    else:
        raise ValueError(f"unknown ur2 strategy: {ur2_strategy!r}")
    values["ur2"] = ur2_val

    values["ur3"] = ur3(psi, u, v)
    try:
        # |phase| folds a conjugate-phase pair onto the equivalent (V, U) order
        values["ms_sum"] = ms_sum_bound(abs(commutation_phase(u, v)))
    except NotWeylPairError:
        values["ms_sum"] = None

    slacks = {}
    for name, val in values.items():
        if val is None:
            continue
        slack = total - val
        slacks[name] = slack
        if slack < -slack_tol:
            raise BoundViolationError(f"{name} exceeds the sum by {-slack:.3e}")

    return BoundReport(
        dim=psi.shape[0],
        du2=du2,
        dv2=dv2,
        sum=total,
        ur1=values["ur1"],
        ur1_weak_cos=values["ur1_weak_cos"],
        ur1_weak_mod=values["ur1_weak_mod"],
        ur1_phase_form=values["ur1_phase_form"],
        ur2=ur2_val,
        ur2_strategy=strategy_tag,
        ur2_sign=ur2_sign,
        ur3=values["ur3"],
        ms_sum=values["ms_sum"],
        cos_phi3=cos_phi3,
        slacks=slacks,
    )
