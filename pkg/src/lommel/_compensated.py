"""Compensated (error-free transformation) arithmetic helpers.

Two uses in this package: Kahan accumulation for convolution-style sums, and
double-double term recurrences for the alternating series, whose terms grow
like e^x before cancelling down to an O(x^(-mu-1)) value.  Double-double keeps
each term to ~1e-31 relative error, which moves the cancellation noise floor
from eps * max|term| down to eps_dd * max|term|.  Fixed-width arithmetic only,
no arbitrary precision.
"""
from __future__ import annotations

_SPLITTER = 134217729.0  # 2^27 + 1, Dekker split constant for binary64


def two_sum(a: float, b: float) -> tuple[float, float]:
    """s, err with s = fl(a + b) and a + b = s + err exactly."""
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def two_prod(a: float, b: float) -> tuple[float, float]:
    """p, err with p = fl(a * b) and a * b = p + err exactly."""
    p = a * b
    ah = _SPLITTER * a
    ah = ah - (ah - a)
    al = a - ah
    bh = _SPLITTER * b
    bh = bh - (bh - b)
    bl = b - bh
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def dd_add(xh: float, xl: float, yh: float, yl: float) -> tuple[float, float]:
    sh, sl = two_sum(xh, yh)
    sl += xl + yl
    s = sh + sl
    return s, sl - (s - sh)


def dd_mul(xh: float, xl: float, yh: float, yl: float) -> tuple[float, float]:
    ph, pl = two_prod(xh, yh)
    pl += xh * yl + xl * yh
    p = ph + pl
    return p, pl - (p - ph)


def dd_div(xh: float, xl: float, yh: float, yl: float) -> tuple[float, float]:
    q1 = xh / yh
    th, tl = two_prod(q1, yh)
    tl += q1 * yl
    rh, rl = dd_add(xh, xl, -th, -tl)
    q2 = (rh + rl) / yh
    q = q1 + q2
    return q, q2 - (q - q1)


class KahanSum:
    """Running compensated sum; .value is accurate to a few ulp of the
    true sum regardless of term count."""

    __slots__ = ("value", "_c")

    def __init__(self) -> None:
        self.value = 0.0
        self._c = 0.0

    def add(self, term: float) -> None:
        y = term - self._c
        t = self.value + y
        self._c = (t - self.value) - y
        self.value = t
