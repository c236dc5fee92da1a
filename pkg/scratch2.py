# Scratch 2:
#  (a) trust-filtered certificate emulation: does (excess - err) produce the
#      correct verdicts at N=192/256 for the F1/F2/Eq/z(1-z) cells?
#  (b) where do the closed-form violations live (radius)?
#  (c) dual-route coefficient agreement at q=0.2 (recursion vs exp route)
#  (d) convex product-route Bieberbach ratios at alpha=0.7
import numpy as np

radii = np.arange(1, 19) * 0.05
angles = (np.arange(256) + 0.5) * 2 * np.pi / 256
R, T = np.meshgrid(radii, angles, indexing="ij")
Z = (R * np.exp(1j * T)).ravel()
RS = R.ravel()

def la(q, a): return np.log(q / (1 - a * (1 - q)))

def exp_series(u):
    n = len(u) - 1
    b = np.zeros(n + 1, dtype=complex); b[0] = 1.0
    for m in range(1, n + 1):
        s = 0.0 + 0.0j
        for k in range(1, m + 1):
            s += k * u[k] * b[m - k]
        b[m] = s / m
    return b

def f1_coeffs(q, a, N, even=False):
    u = np.zeros(N, dtype=complex)
    for n in range(1, N):
        if even and n % 2: continue
        u[n] = 2 * la(q, a) / (q ** n - 1) if not even else 0
    if even:
        for n in range(2, N, 2):
            u[n] = 2 * la(q, a) / (q ** n - 1)
    e = exp_series(u)
    f = np.zeros(N + 1, dtype=complex); f[1:] = e
    return f

def tail_est(c, r):
    w = np.abs(c[-4:])
    n0 = len(c) - 4
    return 10.0 * max(w[i] * r ** (n0 + i) for i in range(4))

def cert_starlike(f, q, a, tol=1e-7):
    N = len(f) - 1
    br = np.array([(1 - q ** n) / (1 - q) for n in range(N + 1)])
    zdq = f * br
    fz = np.polynomial.polynomial.polyval(Z, f)
    pz = np.polynomial.polynomial.polyval(Z, zdq)
    ratio = pz / fz
    expr = (ratio - a) / (1 - a) - 1 / (1 - q)
    excess = np.abs(expr) - 1 / (1 - q)
    tf = np.array([tail_est(f, r) for r in RS])
    tp = np.array([tail_est(zdq, r) for r in RS])
    err = (tp + np.abs(ratio) * tf) / np.maximum(np.abs(fz), 1e-300) / (1 - a)
    sig = excess - err
    i = int(np.argmax(sig))
    return sig[i], Z[i], (excess > tol + err).sum()

print("=== (a) trust-filtered starlike certificates ===")
for N in (192, 256):
    for q in (0.2, 0.5, 0.8):
        for a in (0.0, 0.3, 0.7):
            for name, even in (("F1", False), ("F2", True)):
                wm, wp, nv = cert_starlike(f1_coeffs(q, a, N, even), q, a)
                verdict = "FAIL" if nv else "pass"
                print(f"N={N} {name} q={q} a={a}: margin={wm:+.4e} at r={abs(wp):.2f} {verdict}")
    print()

print("=== (b) closed-form violation radii (F1 family) ===")
for q in (0.2, 0.5, 0.8):
    for a in (0.7,):
        g = q * np.exp(2 * la(q, a) * Z / (1 - Z))
        ex = np.abs(g - a * q) - (1 - a)
        bad = ex > 0
        if bad.any():
            print(f"F1 q={q} a={a}: viol radii {sorted(set(np.round(RS[bad],2)))}, max={ex.max():.4f}")
        else:
            print(f"F1 q={q} a={a}: none")

print("\n=== (c) dual-route coefficient agreement, q=0.2, order 16 ===")
rng = np.random.default_rng(42)
worst = 0.0
worst_rel = 0.0
for trial in range(300):
    k = 1 + trial % 4
    th = rng.uniform(0, 2 * np.pi, k)
    w = rng.uniform(0.05, 1, k); w /= w.sum()
    q = 0.2
    N = 16
    sig = np.exp(1j * th)
    p = np.zeros(N + 1, dtype=complex); p[0] = 1
    for n in range(1, N + 1):
        p[n] = 2 * np.sum(w * sig ** n)
    # route 1: functional-equation recursion
    lnq = np.log(q)
    u = lnq * p.copy(); u[0] = 0
    E = exp_series(u)
    G = (1 - 0.0) * q * E; G[0] = q
    aa = np.zeros(N + 1, dtype=complex); aa[1] = 1
    for n in range(2, N + 1):
        s = 0j
        for kk in range(1, n):
            s += aa[kk] * G[n - kk]
        aa[n] = s / (q ** n - q)
    # route 2: exponent route
    phi = np.zeros(N + 1, dtype=complex)
    for n in range(1, N + 1):
        phi[n] = p[n] * lnq / (q ** n - 1)
    e2 = exp_series(phi[:N + 1])
    f2 = np.zeros(N + 1, dtype=complex); f2[1:] = e2[:N]
    d = np.abs(aa - f2)
    scale = np.maximum(1.0, np.maximum(np.abs(aa), np.abs(f2)))
    worst = max(worst, d.max())
    worst_rel = max(worst_rel, (d / scale).max())
print(f"max abs diff={worst:.3e}  max scaled diff={worst_rel:.3e}")

print("\n=== (d) convex product-route Bieberbach ratios ===")
def convex_from_h_coeffs(p, q, a, N, prod_tol=1e-12):
    lnq = np.log(q)
    u = lnq * p.copy(); u[0] = 0
    h = q * exp_series(u)  # exp(lnq*p)
    n_max = int(np.ceil(np.log(prod_tol) / np.log(q)))
    P = np.zeros(N + 1, dtype=complex); P[0] = 1
    for m in range(n_max + 1):
        fac = (1 - a) * h * (q ** m) ** np.arange(N + 1) / q
        fac[0] = 1.0
        P = np.convolve(P, fac)[:N + 1]
    # reciprocal
    r = np.zeros(N + 1, dtype=complex); r[0] = 1 / P[0]
    for n in range(1, N + 1):
        r[n] = -np.dot(P[1:n + 1], r[n - 1::-1][:n]) * r[0]
    f = np.zeros(N + 2, dtype=complex)
    for n in range(N + 1):
        f[n + 1] = r[n] * (1 - q) / (1 - q ** (n + 1))
    return f

rng = np.random.default_rng(7)
for q in (0.2, 0.5, 0.8):
    for a in (0.0, 0.3, 0.7):
        La = la(q, a)
        N = 12
        Fexp = np.zeros(N + 1, dtype=complex)
        for n in range(1, N + 1):
            Fexp[n] = 2 * La / (q ** n - 1)
        c = exp_series(Fexp)  # c_{n} = coeff n-1 of z exp F -> c[n-1]
        bound = np.array([ (1 - q) / (1 - q ** n) * c[n - 1].real for n in range(2, 11)])
        worst = 0.0
        for trial in range(400):
            k = 1 + trial % 4
            th = rng.uniform(0, 2 * np.pi, k)
            w = rng.uniform(0.05, 1, k); w /= w.sum()
            p = np.zeros(N + 1, dtype=complex); p[0] = 1
            sig = np.exp(1j * th)
            for n in range(1, N + 1):
                p[n] = 2 * np.sum(w * sig ** n)
            f = convex_from_h_coeffs(p, q, a, N)
            ratios = np.abs(f[2:11]) / bound
            worst = max(worst, ratios.max())
        print(f"q={q} a={a}: worst product-route ratio = {worst:.9f}")
