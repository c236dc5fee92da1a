#!/usr/bin/env python3
# Walk through the series substrate and the q-calculus it supports:
# truncated arithmetic, the q-difference operator, and the Jackson integral.
import numpy as np

from qschlicht import power_series as ps
from qschlicht.q_calculus import dq, iq, jackson_sum, q_bracket

# A truncated series stores coefficients c0..cN; arithmetic is exact on that
# window.  The geometric series is the reciprocal of 1 - z:
geom = ps.recip(ps.from_coeffs([1, -1] + [0] * 10))
print("1/(1-z) coefficients:", geom.coeffs[:6].real)

# exp and log are formal and invert each other coefficientwise.
s = ps.from_coeffs([0.0, 0.4, -0.2, 0.1, 0.05])
roundtrip = ps.log(ps.exp(s))
print("exp/log roundtrip error:", np.abs(roundtrip.coeffs - s.coeffs).max())

# The q-difference operator multiplies c_n by the q-bracket [n]_q and shifts
# the degree down; as q -> 1 it becomes d/dz.
q = 0.5
print("[n]_q for n=0..4 at q=0.5:", [q_bracket(n, q) for n in range(5)])
f = ps.from_coeffs([0.0, 1.0, 1.0, 1.0, 1.0])
print("Dq f:", dq(f, q).coeffs.real)
print("d/dz f:", ps.derivative(f).coeffs.real)
for qq in (0.9, 0.99, 0.999):
    gap = np.abs(dq(f, qq).coeffs - ps.derivative(f).coeffs).max()
    print(f"  max |Dq - d/dz| at q={qq}: {gap:.2e}")

# The Jackson integral inverts Dq.  On series it divides by brackets and
# raises the degree; as a sum it is x(1-q) * sum q^n f(x q^n).
print("iq(dq(f)) == f - f(0):",
      np.allclose(iq(dq(f, q), q).coeffs, f.coeffs - f.coeffs[0]))
cubic = ps.from_coeffs([1.0, 2.0, -1.0, 0.5])
x = 0.7
print("jackson_sum vs series integral:",
      jackson_sum(lambda t: ps.eval_at(cubic, t), x, q),
      ps.eval_at(iq(cubic, q), x))
