"""Minimal double-double (~31 significant digits) arithmetic.

Series for Struve/Bessel functions lose up to 9 digits to cancellation near
the branch crossovers, so the terms and the running sums are carried as
unevaluated (hi, lo) pairs. Only the operations the series loops need are
implemented. Algorithms are the classical error-free transforms (Dekker,
Knuth).
"""
from __future__ import annotations

# Dekker splitter for 53-bit doubles: 2^27 + 1
_SPLIT = 134217729.0


def two_sum(a: float, b: float):
    s = a + b
    t = s - a
    e = (a - (s - t)) + (b - t)
    return s, e


def quick_two_sum(a: float, b: float):
    # requires |a| >= |b|
    s = a + b
    e = b - (s - a)
    return s, e


def two_prod(a: float, b: float):
    p = a * b
    ah = _SPLIT * a
    ah = ah - (ah - a)
    al = a - ah
    bh = _SPLIT * b
    bh = bh - (bh - b)
    bl = b - bh
    e = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, e


def dd(a: float):
    """Promote a double to a double-double."""
    return (a, 0.0)


def dd_add(x, y):
    s, e = two_sum(x[0], y[0])
    e += x[1] + y[1]
    return quick_two_sum(s, e)


def dd_sub(x, y):
    return dd_add(x, (-y[0], -y[1]))


def dd_mul(x, y):
    p, e = two_prod(x[0], y[0])
    e += x[0] * y[1] + x[1] * y[0]
    return quick_two_sum(p, e)


def dd_mul_d(x, a: float):
    p, e = two_prod(x[0], a)
    e += x[1] * a
    return quick_two_sum(p, e)


def dd_div(x, y):
    q1 = x[0] / y[0]
    r = dd_sub(x, dd_mul_d(y, q1))
    q2 = (r[0] + r[1]) / y[0]
    return quick_two_sum(q1, q2)


def dd_div_d(x, a: float):
    q1 = x[0] / a
    p, e = two_prod(q1, a)
    r = ((x[0] - p) - e) + x[1]
    q2 = r / a
    return quick_two_sum(q1, q2)


def dd_neg(x):
    return (-x[0], -x[1])


def dd_abs(x) -> float:
    return abs(x[0])


def to_float(x) -> float:
    return x[0] + x[1]
