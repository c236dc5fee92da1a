# Scratch: closed-form membership truth tables before freezing tests.
# Question 1: on the default grid (r in {0.05..0.90}, 256 midpoint angles), do
# the exp-form candidates F1/F2 (starlike criterion) and E_q (convex criterion)
# genuinely satisfy the class inequalities?  Closed forms, no truncation:
#   F1:  g(z) = f(qz)/f(z)             = q*exp(2*La*z/(1-z))
#   F2:  g(z)                          = q*exp(2*La*z^2/(1-z^2))
#   E_q: gc(z) = q*Dqf(qz)/Dqf(z)      = q*exp(2*La*z/(1-z))   (same as F1)
#   z/(1-z): gc(z) = q*(1-z)/(1-q^2 z)
# criterion: |g - alpha*q| <= 1-alpha on the grid.
import numpy as np

radii = np.arange(1, 19) * 0.05
angles = (np.arange(256) + 0.5) * 2 * np.pi / 256
R, T = np.meshgrid(radii, angles, indexing="ij")
Z = R * np.exp(1j * T)
z = Z.ravel()

def la(q, a):
    return np.log(q / (1 - a * (1 - q)))

print("=== closed-form membership excess (max over grid of |g-aq|-(1-a)) ===")
for fam, gfun in [
    ("F1/Eq", lambda q, a: q * np.exp(2 * la(q, a) * z / (1 - z))),
    ("F2", lambda q, a: q * np.exp(2 * la(q, a) * z**2 / (1 - z**2))),
    ("z/(1-z)", lambda q, a: q * (1 - z) / (1 - q * q * z)),
]:
    for a in (0.0, 0.3, 0.7):
        row = []
        for q in (0.2, 0.5, 0.8):
            g = gfun(q, a)
            excess = np.abs(g - a * q) - (1 - a)
            row.append(f"q={q}: {excess.max():+.6f}")
        print(f"{fam:9s} a={a}: " + "  ".join(row))

# Question 2: truncated-series certificate for F1 at various orders: does the
# polynomial evaluation agree with the closed-form verdict (esp. q=0.2, a=0)?
print("\n=== truncated certificate vs closed form, F1 starlike ===")

def exp_series(u):
    n = len(u) - 1
    b = np.zeros(n + 1, dtype=complex)
    b[0] = 1.0
    for m in range(1, n + 1):
        s = 0.0 + 0.0j
        for k in range(1, m + 1):
            s += k * u[k] * b[m - k]
        b[m] = s / m
    return b

def f1_coeffs(q, a, N):
    u = np.zeros(N, dtype=complex)
    for n in range(1, N):
        u[n] = 2 * la(q, a) / (q**n - 1)
    e = exp_series(u)
    f = np.zeros(N + 1, dtype=complex)
    f[1:] = e
    return f

def starlike_excess(f, q, a):
    # polynomial evaluation of the defining expression
    N = len(f) - 1
    br = np.array([(1 - q**n) / (1 - q) for n in range(N + 1)])
    zdq = f * br  # coefficients of z*Dq f
    fz = np.polynomial.polynomial.polyval(z, f)
    gz = np.polynomial.polynomial.polyval(z, zdq)
    ratio = gz / fz
    expr = (ratio - a) / (1 - a) - 1 / (1 - q)
    return (np.abs(expr) - 1 / (1 - q)).max() * (1 - a) * (1 - q), np.abs(fz).min()

for q in (0.2, 0.5, 0.8):
    for a in (0.0, 0.3, 0.7):
        for N in (32, 64, 128, 256):
            ex, fmin = starlike_excess(f1_coeffs(q, a, N), q, a)
            print(f"F1 q={q} a={a} N={N}: excess_gunits={ex:+.3e} min|f|={fmin:.2e}")
        print()
