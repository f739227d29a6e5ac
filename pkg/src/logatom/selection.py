"""Topological selection rules linking the deficit factor to angular momentum.

For alpha = p/q in lowest terms the allowed bare angular numbers are the
multiples l = k*p, and each maps to the integer effective number
l_alpha = k*q. Everything here is exact integer arithmetic.
"""
from __future__ import annotations

import math

from .core import RationalAlpha


class _AllAlphas:
    """Marker for the l = 0 row: every deficit factor gives l_alpha = 0."""

    def __str__(self) -> str:
        return "1/2 < alpha <= 1 (all)"

    def __repr__(self) -> str:
        return "ALL_ALPHAS"


ALL_ALPHAS = _AllAlphas()


def allowed_pairs(alpha: RationalAlpha, k_max: int) -> list[tuple[int, int]]:
    """Pairs (l, l_alpha) = (k*p, k*q) for k = 0..k_max, in k order."""
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    return [(k * alpha.p, k * alpha.q) for k in range(k_max + 1)]


def alphas_for_l(l: int, q_max: int):
    """Every deficit factor in (1/2, 1] with denominator <= q_max that admits l.

    Returns RationalAlpha values sorted ascending. For l = 0 the answer is the
    ALL_ALPHAS marker in a one-element list, since any factor gives l_alpha = 0.
    Published listings usually sample only the fractions with terminating
    decimal expansions; this enumeration is complete, so it is a superset of
    such listings.
    """
    if l < 0:
        raise ValueError("l must be >= 0")
    if q_max < 1:
        raise ValueError("q_max must be >= 1")
    if l == 0:
        return [ALL_ALPHAS]
    found = []
    for p in range(1, l + 1):
        if l % p != 0:
            continue
        # alpha = p/q > 1/2 forces q < 2p; gcd = 1 keeps each value once
        for q in range(p, min(2 * p, q_max + 1)):
            if math.gcd(p, q) == 1:
                found.append(RationalAlpha(p, q))
    found.sort(key=lambda a: a.value())
    return found


def complement_pairs(alpha: RationalAlpha, k_max: int) -> list[tuple[int, int]]:
    """Pairs for the complement factor alpha_c = 1 - alpha = (q-p)/q.

    The l_alpha sequence of the complement coincides with that of alpha
    itself; only the bare l differs (k*(q-p) instead of k*p).
    """
    if alpha.is_euclidean():
        raise ValueError("alpha = 1 has no complement fraction (1 - 1 = 0)")
    # gcd(q-p, q) = gcd(p, q) = 1, so the complement is already reduced; build
    # it directly to avoid the sub-1/2 warning that make_alpha would emit.
    comp = RationalAlpha(alpha.q - alpha.p, alpha.q)
    return allowed_pairs(comp, k_max)
