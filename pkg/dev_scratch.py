# Dev scratch: resolve empirical conventions before freezing tests. Not part of the package.
import numpy as np
from urbound.linalg import eig_hermitian, haar_random_state
from urbound.operators import clock, shift, dft, clock_shift_pair, harper, commutation_phase
from urbound.uncertainty import variance, expectation, bargmann3, covariance
from urbound.bounds import ur1, ur1_weak_cos, ur1_weak_mod, ur1_phase_form, ur2_best, ur3, ms_sum_bound, ms_relation_check
from urbound.mus import harper_ground, realign_phases, critical_residual, mus_record

np.set_printoptions(precision=8, suppress=True)

print("=== eig sanity ===")
h = np.array([[0, -1], [-1, 0]], dtype=complex) + np.array([[-1, 0], [0, 1]], dtype=complex)  # -sx - sz
dec = eig_hermitian(h)
print("ground of -sx-sz:", dec.eigenvalues[0], "(expect -sqrt2 =", -np.sqrt(2), ")")

rng = np.random.default_rng(1)
for d in (3, 8, 17):
    m = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    m = 0.5 * (m + m.conj().T)
    dec = eig_hermitian(m)
    rec = dec.eigenvectors @ np.diag(dec.eigenvalues) @ dec.eigenvectors.conj().T
    print(f"d={d} recon={np.linalg.norm(rec - m):.2e} orth={np.linalg.norm(dec.eigenvectors.conj().T@dec.eigenvectors - np.eye(d)):.2e}")

print("\n=== dft conjugation ===")
for d in (2, 3, 5, 8):
    f = dft(d)
    err = np.linalg.norm(f @ clock(d) @ f.conj().T - shift(d))
    print(f"d={d} |F U F^dag - V| = {err:.2e}, phase(clock,shift)={commutation_phase(clock(d), shift(d)):.6f} vs {2*np.pi/d:.6f}")

print("\n=== Table I reproduction ===")
table = {
    2: (0.5, 0.5, 0.5, 0.5),
    3: (0.533494, 0.468072, 0.533492, 0.454247),
    4: (0.5, 0.416667, 0.499721, 0.375),
    5: (0.450012, 0.370848, 0.447758, 0.305345),
    6: (0.401089, 0.33344, 0.39402, 0.254505),
    7: (0.358678, 0.302603, 0.348081, 0.218263),
    8: (0.323223, 0.276769, 0.314628, 0.191461),
}
for d in range(2, 9):
    rec = mus_record(d)
    pair = clock_shift_pair(d)
    g = harper_ground(pair)
    re = realign_phases(g.state, pair)
    psi = re.state
    # alternative UR-1 with |cos|
    tri = bargmann3(psi, pair.u, pair.v)
    guv = abs(expectation(psi, pair.u.conj().T @ pair.v))
    ur1_abs = 1 + guv**2 - 2 * abs(np.cos(tri.phase)) * tri.modulus if tri.phase_defined else 1 + guv**2
    t = table[d]
    print(f"d={d} dU2={rec.delta_u2:.6f} (tab {t[0]})  ur1h={rec.ur1_half:.6f} (tab {t[1]}) ur1h_abs={0.5*ur1_abs:.6f}  "
          f"ur2h={rec.ur2_half:.6f} (tab {t[2]})  ur3h={rec.ur3_half:.6f} (tab {t[3]})")
    print(f"      realign=({rec.realignment})  aligned-resid={rec.residual:.2e}  gap={rec.spectral_gap:.4f}  "
          f"dV2={rec.delta_v2:.6f}  cosPhi3={np.cos(tri.phase) if tri.phase_defined else 'undef'}")

print("\n=== excited-state critical residuals (d=5) ===")
pair = clock_shift_pair(5)
dec = eig_hermitian(harper(pair))
for k in range(5):
    psi = dec.eigenvectors[:, k]
    re = realign_phases(psi, pair)
    try:
        r = critical_residual(re.state, pair.u, pair.v)
        eu = expectation(re.state, pair.u)
        ev = expectation(re.state, pair.v)
        print(f"k={k} E={dec.eigenvalues[k]:+.4f} resid={r:.2e} aligned={re.aligned} <U>={eu:.4f} <V>={ev:.4f}")
    except Exception as e:
        print(f"k={k} E={dec.eigenvalues[k]:+.4f} {type(e).__name__}: {e}")

print("\n=== fig-1 sweep family, d=3: readings A vs B ===")
def family_A(d, th):
    v = np.zeros(d, dtype=complex)
    v[d // 2] = np.cos(th)          # j = 0
    v[d // 2 - 1] = -np.sin(th)     # j = -1
    return v

def family_B(d, th):
    v = np.zeros(d, dtype=complex)
    v[0] = np.cos(th)
    v[d - 1] = -np.sin(th)
    return v

for d in (3, 5, 8, 12):
    pair = clock_shift_pair(d)
    msb = ms_sum_bound(pair.phase)
    worstA = worstB = np.inf
    negA = negB = 0
    for th in np.linspace(0, np.pi / 4, 200):
        for fam, tag in ((family_A, "A"), (family_B, "B")):
            psi = fam(d, th)
            tri = bargmann3(psi, pair.u, pair.v)
            c = np.cos(tri.phase) if tri.phase_defined else None
            b1 = ur1(psi, pair.u, pair.v)
            gap = b1 - msb
            if tag == "A":
                worstA = min(worstA, gap)
                if c is not None and c < -1e-12: negA += 1
            else:
                worstB = min(worstB, gap)
                if c is not None and c < -1e-12: negB += 1
    print(f"d={d}: A worst(ur1-ms)={worstA:.4f} negcos={negA} | B worst={worstB:.4f} negcos={negB}")
