"""Truncated complex power-series arithmetic.

A series is stored by its first ``order + 1`` coefficients ``c0..cN`` and
every operation is exact modulo ``z**(N+1)``.  Binary operations truncate to
the shorter operand; nothing is padded silently.  The exponential and
logarithm are formal (coefficientwise) and therefore need ``c0 = 0`` and
``c0 = 1`` respectively, which is all the constructions here require.

Coefficients are binary64 complex.  Orders up to 256 are supported; the
coefficients of the extremal-type functions stay representable in that range
for q >= 0.1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    ConstantTermNotOneError,
    NonzeroConstantTermError,
    ZeroConstantTermError,
)

MAX_ORDER = 256


def _as_coeffs(values) -> np.ndarray:
    c = np.ascontiguousarray(values, dtype=np.complex128)
    if c.ndim != 1 or c.size == 0:
        raise ValueError("coefficients must form a non-empty 1-d sequence")
    if c.size - 1 > MAX_ORDER:
        raise ValueError(f"order {c.size - 1} exceeds the supported maximum {MAX_ORDER}")
    if not np.all(np.isfinite(c)):
        raise ValueError("coefficients must all be finite")
    return c


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """A power series modulo z^(order+1); ``coeffs[n]`` multiplies ``z**n``."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = _as_coeffs(self.coeffs)
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    def __repr__(self):
        head = ", ".join(f"{c:.6g}" for c in self.coeffs[:4])
        tail = ", ..." if self.order >= 4 else ""
        return f"TruncatedSeries(order={self.order}, [{head}{tail}])"

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            n = min(self.order, other.order)
            return TruncatedSeries(self.coeffs[: n + 1] + other.coeffs[: n + 1])
        c = self.coeffs.copy()
        c[0] += other
        return TruncatedSeries(c)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-self.coeffs)

    def __sub__(self, other):
        return self + (-other if isinstance(other, TruncatedSeries) else -complex(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return mul(self, other)
        return TruncatedSeries(self.coeffs * complex(other))

    __rmul__ = __mul__

    def __call__(self, z0: complex) -> complex:
        return eval_at(self, z0)

    # conveniences used throughout the class constructions
    def recip(self):
        return recip(self)

    def exp(self):
        return exp(self)

    def log(self):
        return log(self)

    def dilate(self, w: complex):
        return dilate(self, w)

    def derivative(self):
        return derivative(self)

    def truncate(self, order: int):
        return truncate(self, order)

    def times_z(self):
        return times_z(self)

    def div_z(self):
        return div_z(self)


def from_coeffs(values) -> TruncatedSeries:
    return TruncatedSeries(np.asarray(values, dtype=np.complex128))


def zero(order: int) -> TruncatedSeries:
    return TruncatedSeries(np.zeros(order + 1, dtype=np.complex128))


def one(order: int) -> TruncatedSeries:
    c = np.zeros(order + 1, dtype=np.complex128)
    c[0] = 1.0
    return TruncatedSeries(c)


def identity(order: int) -> TruncatedSeries:
    """The series z."""
    c = np.zeros(order + 1, dtype=np.complex128)
    if order >= 1:
        c[1] = 1.0
    return TruncatedSeries(c)


def truncate(a: TruncatedSeries, order: int) -> TruncatedSeries:
    if order >= a.order:
        return a
    return TruncatedSeries(a.coeffs[: order + 1])


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, truncated to the shorter operand."""
    n = min(a.order, b.order)
    full = np.convolve(a.coeffs[: n + 1], b.coeffs[: n + 1])
    return TruncatedSeries(full[: n + 1])


def recip(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse; requires a nonzero constant term."""
    if a.coeffs[0] == 0:
        raise ZeroConstantTermError("cannot invert a series with c0 = 0")
    n = a.order
    c = a.coeffs
    r = np.empty(n + 1, dtype=np.complex128)
    r[0] = 1.0 / c[0]
    for m in range(1, n + 1):
        # c0*r[m] + sum_{k=1..m} c[k] r[m-k] = 0
        acc = 0.0 + 0.0j
        for k in range(1, m + 1):
            acc += c[k] * r[m - k]
        r[m] = -acc * r[0]
    return TruncatedSeries(r)


def exp(a: TruncatedSeries) -> TruncatedSeries:
    """Formal exponential; requires c0 = 0 so no scalar exp is involved."""
    if a.coeffs[0] != 0:
        raise NonzeroConstantTermError("formal exp requires c0 = 0")
    n = a.order
    u = a.coeffs
    b = np.empty(n + 1, dtype=np.complex128)
    b[0] = 1.0
    for m in range(1, n + 1):
        # b' = u' b  =>  m*b[m] = sum_{k=1..m} k u[k] b[m-k]
        acc = 0.0 + 0.0j
        for k in range(1, m + 1):
            acc += k * u[k] * b[m - k]
        b[m] = acc / m
    return TruncatedSeries(b)


def log(a: TruncatedSeries) -> TruncatedSeries:
    """Formal logarithm; requires c0 = 1 (no branch choice is involved)."""
    if a.coeffs[0] != 1:
        raise ConstantTermNotOneError("formal log requires c0 = 1")
    n = a.order
    c = a.coeffs
    l = np.empty(n + 1, dtype=np.complex128)
    l[0] = 0.0
    for m in range(1, n + 1):
        # a' = l' a  =>  m*a[m] = sum_{k=1..m} k l[k] a[m-k]
        acc = 0.0 + 0.0j
        for k in range(1, m):
            acc += k * l[k] * c[m - k]
        l[m] = (m * c[m] - acc) / m
    return TruncatedSeries(l)


def dilate(a: TruncatedSeries, w: complex) -> TruncatedSeries:
    """a(w*z): multiplies c_n by w**n."""
    powers = np.power(complex(w), np.arange(a.order + 1))
    return TruncatedSeries(a.coeffs * powers)


def derivative(a: TruncatedSeries) -> TruncatedSeries:
    """Classical derivative d/dz; order drops by one."""
    if a.order == 0:
        return zero(0)
    n = np.arange(1, a.order + 1)
    return TruncatedSeries(a.coeffs[1:] * n)


def eval_at(a: TruncatedSeries, z0: complex) -> complex:
    """Horner evaluation of the truncated polynomial.

    Meaningful for |z0| < 1 modulo the truncation tail; see
    :func:`tail_estimate` for the error heuristic used by certificates.
    """
    acc = 0.0 + 0.0j
    for c in a.coeffs[::-1]:
        acc = acc * z0 + c
    return acc


def eval_grid(a: TruncatedSeries, z: np.ndarray) -> np.ndarray:
    """Vectorized Horner evaluation on an array of points."""
    acc = np.zeros(z.shape, dtype=np.complex128)
    for c in a.coeffs[::-1]:
        acc = acc * z + c
    return acc


def times_z(a: TruncatedSeries) -> TruncatedSeries:
    """z * a(z); order grows by one."""
    c = np.empty(a.order + 2, dtype=np.complex128)
    c[0] = 0.0
    c[1:] = a.coeffs
    return TruncatedSeries(c)


def div_z(a: TruncatedSeries) -> TruncatedSeries:
    """a(z)/z for series with c0 = 0; order drops by one."""
    if a.coeffs[0] != 0:
        raise ZeroConstantTermError("cannot divide by z: constant term is nonzero")
    if a.order == 0:
        return zero(0)
    return TruncatedSeries(a.coeffs[1:].copy())


def tail_estimate(a: TruncatedSeries, r: float, window: int = 4, safety: float = 10.0) -> float:
    """Heuristic bound on |sum_{n>N} c_n z^n| at |z| = r.

    Uses the largest of the last ``window`` terms |c_n| r^n scaled by
    ``safety``.  For functions analytic on the unit disk the terms decay
    geometrically once converged, so this is reliable exactly where the
    polynomial evaluation is usable; where it is large the evaluation must
    not be trusted.
    """
    n0 = max(0, a.order + 1 - window)
    ns = np.arange(n0, a.order + 1)
    terms = np.abs(a.coeffs[n0:]) * np.power(float(r), ns)
    return float(safety * terms.max())
