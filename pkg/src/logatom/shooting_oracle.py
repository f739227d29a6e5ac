"""Independent shooting solver used to cross-check the finite-difference path.

Shares no discretization code with the production solver: it integrates the
radial equation in the log variable x = ln r with the fourth-order Numerov
three-point scheme, counts sign changes, and bisects in energy. Writing
R(r) = sqrt(r) y(ln r) turns the half-line equation into

    y'' = [l_alpha^2 + e^{2x} (x - E)] y,

whose solutions behave as y ~ e^{l_alpha x} at the inner end, i.e. exactly
the regular branch R ~ r^{l_alpha + 1/2}. Integrating in x both resolves the
small-r region geometrically and keeps the regular/irregular pair maximally
separated, which is what makes this an oracle-grade integrator: its only
tunable is the step, and its eigenvalues converge at O(h^4).

Accuracy over speed; not a production path.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numba import njit

from .core import ConvergenceError, RadialGrid

# Energy window above the classical floor scanned for node-count brackets
# before geometric growth kicks in.
_WINDOW = 50.0
# No bound level of interest sits this high; reaching it means the request
# was malformed (e.g. asking for the 10^6-th state).
_ENERGY_CEILING = 60.0
_RENORM_LIMIT = 1e250


@njit(cache=True)
def _series_start(x, l_alpha, energy):
    """Two-term inner expansion of the regular solution, y ~ e^{l_alpha x}(1 + ...)."""
    a = 1.0 / (4.0 * (l_alpha + 1.0))
    b = -energy / (4.0 * (l_alpha + 1.0)) - (l_alpha + 2.0) / (
        8.0 * (l_alpha + 1.0) * (l_alpha + 1.0)
    )
    return 1.0 + math.exp(2.0 * x) * (a * x + b)


@njit(cache=True)
def _sweep_nodes(x0, hx, n, l_alpha, energy):
    """Outward Numerov sweep; returns the number of sign changes.

    The count runs over every consecutive pair including the last one, so a
    flip of the outer value registers as one more node: the bracketing
    predicate 'count >= n' is then exactly the outer matching condition.
    """
    ll = l_alpha * l_alpha
    c = hx * hx / 12.0
    x1 = x0 + hx
    y0 = _series_start(x0, l_alpha, energy)
    y1 = math.exp(l_alpha * hx) * _series_start(x1, l_alpha, energy)
    g0 = ll + math.exp(2.0 * x0) * (x0 - energy)
    g1 = ll + math.exp(2.0 * x1) * (x1 - energy)
    nodes = 0
    if (y0 > 0.0 and y1 < 0.0) or (y0 < 0.0 and y1 > 0.0):
        nodes += 1
    for i in range(2, n):
        xi = x0 + hx * i
        gi = ll + math.exp(2.0 * xi) * (xi - energy)
        y2 = (2.0 * y1 * (1.0 + 5.0 * c * g1) - y0 * (1.0 - c * g0)) / (1.0 - c * gi)
        if (y1 > 0.0 and y2 < 0.0) or (y1 < 0.0 and y2 > 0.0):
            nodes += 1
        y0 = y1
        y1 = y2
        g0 = g1
        g1 = gi
        ay = abs(y1)
        if ay > _RENORM_LIMIT:
            y0 /= ay
            y1 /= ay
    return nodes


@njit(cache=True)
def _sweep_vector(x0, hx, n, l_alpha, energy):
    """Outward Numerov sweep keeping the whole solution; renormalized in place."""
    ll = l_alpha * l_alpha
    c = hx * hx / 12.0
    y = np.empty(n)
    y[0] = _series_start(x0, l_alpha, energy)
    y[1] = math.exp(l_alpha * hx) * _series_start(x0 + hx, l_alpha, energy)
    g0 = ll + math.exp(2.0 * x0) * (x0 - energy)
    g1 = ll + math.exp(2.0 * (x0 + hx)) * ((x0 + hx) - energy)
    for i in range(2, n):
        xi = x0 + hx * i
        gi = ll + math.exp(2.0 * xi) * (xi - energy)
        y[i] = (2.0 * y[i - 1] * (1.0 + 5.0 * c * g1) - y[i - 2] * (1.0 - c * g0)) / (
            1.0 - c * gi
        )
        g0 = g1
        g1 = gi
        ay = abs(y[i])
        if ay > _RENORM_LIMIT:
            for j in range(i + 1):
                y[j] /= ay
    return y


@dataclass(frozen=True, eq=False)
class NumerovResult:
    """Shooting solution sampled on the oracle's own log-spaced radii."""

    r: np.ndarray
    radial: np.ndarray
    node_count: int
    energy: float
    l_alpha: int


def _log_axis(grid: RadialGrid) -> tuple[float, float, int]:
    x_min = math.log(grid.r_min)
    x_max = math.log(grid.r_max)
    n = grid.n_points
    return x_min, (x_max - x_min) / (n - 1), n


def numerov_integrate(l_alpha: int, energy: float, grid: RadialGrid) -> NumerovResult:
    """Integrate outward at a trial energy; not an eigensolve by itself.

    The given grid fixes the radial span and point count; the sweep runs on
    the log axis over the same [r_min, r_max]. The returned radial values are
    R = sqrt(r) y, normalized to unit L2 over r when the norm is finite.
    """
    if l_alpha < 0:
        raise ValueError("l_alpha must be >= 0")
    x0, hx, n = _log_axis(grid)
    y = _sweep_vector(x0, hx, n, float(l_alpha), float(energy))
    x = x0 + hx * np.arange(n)
    r = np.exp(x)
    radial = np.exp(0.5 * x) * y
    norm2 = float(np.trapezoid(radial * radial, r))
    if norm2 > 0 and np.isfinite(norm2):
        radial = radial / math.sqrt(norm2)
    nodes = int(_sweep_nodes(x0, hx, n, float(l_alpha), float(energy)))
    return NumerovResult(
        r=r, radial=radial, node_count=nodes, energy=float(energy), l_alpha=l_alpha
    )


def _classical_floor(l_alpha: float, x0: float, hx: float, n: int) -> float:
    x = x0 + hx * np.arange(n)
    return float(np.min(x + l_alpha * l_alpha * np.exp(-2.0 * x)))


def shoot_eigenvalue(
    l_alpha: int, n: int, grid: RadialGrid, tol: float = 1e-12
) -> float:
    """n-th level (n = 1 is the ground state) by node-count bisection.

    The bracket starts at [floor, floor + 50] where the floor is the minimum
    of the log-variable classical function x + l_alpha^2 e^{-2x} (no level
    can lie below it), and doubles until it holds n sign changes. Bisection
    then pins the energy where the count steps from n-1 to n, which includes
    the outer-value sign flip (see _sweep_nodes) and so is the Dirichlet
    level of the box.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if l_alpha < 0:
        raise ValueError("l_alpha must be >= 0")
    if tol <= 0:
        raise ValueError("tol must be positive")
    x0, hx, npts = _log_axis(grid)
    la = float(l_alpha)
    lo = _classical_floor(la, x0, hx, npts)
    window = _WINDOW
    hi = lo + window
    while _sweep_nodes(x0, hx, npts, la, hi) < n:
        window *= 2.0
        hi = lo + window
        if hi > _ENERGY_CEILING:
            raise ConvergenceError(
                f"no bracket for level n={n}, l_alpha={l_alpha}: fewer than "
                f"{n} node transitions below E={_ENERGY_CEILING}"
            )
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if _sweep_nodes(x0, hx, npts, la, mid) >= n:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)
