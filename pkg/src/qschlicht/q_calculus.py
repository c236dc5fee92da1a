"""The q-difference operator, the Jackson q-integral, and derived constants.

For 0 < q < 1 the q-difference operator acts on coefficients by
``c_n z^n -> c_n [n]_q z^(n-1)`` with the q-bracket ``[n]_q = (1-q^n)/(1-q)``,
which is the coefficient form of ``(f(z) - f(qz)) / (z (1-q))``.  The Jackson
integral inverts it: ``c_n z^n -> c_n z^(n+1) / [n+1]_q``.  The integral
raises the truncation order by one so that the round trips

    iq(dq(f)) == f - f(0)        dq(iq(f)) == f

hold without losing the top coefficient.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import NonConvergenceError, RangeError
from .power_series import MAX_ORDER, TruncatedSeries, zero


def _check_q(q: float) -> float:
    q = float(q)
    if not (0.0 < q < 1.0):
        raise RangeError(f"q must lie strictly inside (0, 1), got {q}")
    return q


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not (0.0 <= alpha < 1.0):
        raise RangeError(f"alpha must lie in [0, 1), got {alpha}")
    return alpha


@dataclass(frozen=True)
class ClassParams:
    """Parameters shared by every class construction: q, alpha, order, tol."""

    q: float
    alpha: float = 0.0
    order: int = 32
    tol: float = 1e-9

    def __post_init__(self):
        _check_q(self.q)
        _check_alpha(self.alpha)
        if not (4 <= int(self.order) <= MAX_ORDER):
            raise RangeError(f"order must lie in [4, {MAX_ORDER}], got {self.order}")
        if not self.tol > 0:
            raise RangeError("tol must be positive")
        object.__setattr__(self, "order", int(self.order))


@dataclass(frozen=True)
class QLogRatios:
    """The log-ratio constants every bound formula is built from.

    l1, l2, l3 = ln q / (q^n - 1) for n = 1, 2, 3 (all positive on (0,1));
    lalpha = ln(q / (1 - alpha(1-q))), which equals ln q at alpha = 0 and is
    negative throughout because the argument sits in (0, 1).
    """

    q: float
    alpha: float
    l1: float = field(init=False)
    l2: float = field(init=False)
    l3: float = field(init=False)
    lalpha: float = field(init=False)

    def __post_init__(self):
        q = _check_q(self.q)
        alpha = _check_alpha(self.alpha)
        lnq = math.log(q)
        object.__setattr__(self, "l1", lnq / (q - 1.0))
        object.__setattr__(self, "l2", lnq / (q * q - 1.0))
        object.__setattr__(self, "l3", lnq / (q ** 3 - 1.0))
        ratio = q / (1.0 - alpha * (1.0 - q))
        if not (0.0 < ratio < 1.0):  # guaranteed for valid (q, alpha)
            raise RangeError(f"log-ratio argument {ratio} escaped (0, 1)")
        object.__setattr__(self, "lalpha", math.log(ratio))

    @classmethod
    def from_params(cls, params: ClassParams) -> "QLogRatios":
        return cls(params.q, params.alpha)


def q_powers(q: float, n_max: int) -> np.ndarray:
    """[1, q, q^2, ..., q^n_max] by cumulative multiplication.

    Every bracket-type quantity in the library derives its powers from this
    one routine; mixing it with libm/vectorized pow would break the exact
    (bitwise) round-trip identities between the q-integral and the bounds.
    """
    out = np.empty(n_max + 1)
    out[0] = 1.0
    for k in range(1, n_max + 1):
        out[k] = out[k - 1] * q
    return out


def q_bracket(n: int, q: float) -> float:
    """[n]_q = (1 - q^n)/(1 - q); equals n in the limit q -> 1."""
    q = _check_q(q)
    if n < 0:
        raise RangeError("q-bracket needs n >= 0")
    return float((1.0 - q_powers(q, n)[n]) / (1.0 - q))


def _brackets(n_max: int, q: float) -> np.ndarray:
    return (1.0 - q_powers(q, n_max)) / (1.0 - q)


def dq(a: TruncatedSeries, q: float) -> TruncatedSeries:
    """q-difference operator on a series; order drops by one."""
    q = _check_q(q)
    if a.order == 0:
        return zero(0)
    br = _brackets(a.order, q)
    return TruncatedSeries(a.coeffs[1:] * br[1:])


def iq(a: TruncatedSeries, q: float) -> TruncatedSeries:
    """Jackson q-integral on a series; order grows by one.

    Raising the order keeps ``iq(dq(f)) == f - f(0)`` exact coefficientwise.
    """
    q = _check_q(q)
    out = np.zeros(a.order + 2, dtype=np.complex128)
    br = _brackets(a.order + 1, q)
    # divide componentwise: complex/real promotion would round differently
    out.real[1:] = a.coeffs.real / br[1:]
    out.imag[1:] = a.coeffs.imag / br[1:]
    return TruncatedSeries(out)


def jackson_sum(fn, x: float, q: float, tail_tol: float = 1e-12,
                max_terms: int = 100_000) -> complex:
    """Numeric Jackson integral x(1-q) sum_n q^n fn(x q^n).

    The sum is cut once the geometric tail bound x * q^(n+1) * sup|fn| drops
    below ``tail_tol``; the sup is tracked from the evaluated points, which is
    sound for fn bounded on [0, x].  Raises NonConvergenceError if the terms
    fail to decay within the iteration cap.
    """
    q = _check_q(q)
    if tail_tol <= 0:
        raise RangeError("tail_tol must be positive")
    total = 0.0 + 0.0j
    bound = 0.0
    qn = 1.0
    for _ in range(max_terms):
        value = complex(fn(x * qn))
        if not (math.isfinite(value.real) and math.isfinite(value.imag)):
            raise NonConvergenceError("integrand returned a non-finite value")
        total += qn * value
        bound = max(bound, abs(value))
        qn *= q
        if abs(x) * qn * max(bound, 1.0) < tail_tol:
            return x * (1.0 - q) * total
    raise NonConvergenceError(f"q-sum did not converge within {max_terms} terms")
