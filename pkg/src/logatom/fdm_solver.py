"""Finite-difference eigensolver for the radial log-atom problem.

The planar radial operator is discretized in flux (face-integrated) form on
the uniform grid and symmetrized with the sqrt(r) similarity map, so the
eigenvectors of the resulting tridiagonal matrix sample the half-line
function R(r) directly. The face form matters: a pointwise stencil for the
centrifugal -1/(4 r^2) channel loses the zero-flux condition at the inner
cell face and converges to a different self-adjoint extension of the s-wave
operator, shifting its ground level by +0.15. The face-integrated operator
reproduces the physical (Friedrichs) levels at O(h^2).

Eigenvalues come from Sturm-count bisection, eigenvectors from shifted
inverse iteration; both are deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit
from scipy.linalg import solve_banded

from .core import (
    ConvergenceError,
    QuantumNumbers,
    RadialGrid,
    RationalAlpha,
    SolverConfig,
    default_config,
)

NORM_CONVENTION = "unit L2 on the half-line: sum R_i^2 h = 1"

# Relative floor below which a component counts as numerically zero when
# fixing the overall sign or counting nodes.
_NOISE_FLOOR = 1e-9


@dataclass(frozen=True, eq=False)
class TridiagonalOperator:
    """Symmetric tridiagonal matrix tied to the grid it was built on."""

    diagonal: np.ndarray
    off_diagonal: np.ndarray
    grid: RadialGrid

    def __post_init__(self):
        if self.off_diagonal.shape[0] != self.diagonal.shape[0] - 1:
            raise ValueError("off_diagonal must be one shorter than diagonal")

    @property
    def size(self) -> int:
        return self.diagonal.shape[0]

    def apply(self, v: np.ndarray) -> np.ndarray:
        out = self.diagonal * v
        out[:-1] += self.off_diagonal * v[1:]
        out[1:] += self.off_diagonal * v[:-1]
        return out


@dataclass(frozen=True, eq=False)
class EigenState:
    """One bound state: quantum labels, energy, sampled radial function."""

    quantum: QuantumNumbers
    alpha: RationalAlpha
    energy: float
    radial_vector: np.ndarray
    grid: RadialGrid
    norm_convention: str = NORM_CONVENTION


def discretize(l_alpha: int, grid: RadialGrid) -> TridiagonalOperator:
    """Build the symmetric tridiagonal form of the radial operator.

    Row i integrates -(1/r)(r u')' + [l_alpha^2/r^2 + ln r] u over the cell
    [r_i - h/2, r_i + h/2]; the flux through the inner face of cell 0 is set
    to zero (the regular solution carries no probability current into the
    origin) and the node past r_max is a Dirichlet zero. Symmetrizing with
    diag(sqrt(r)) turns cell averages of the planar function u into samples
    of the half-line function R = sqrt(r) u, which is what eigenvector()
    returns.
    """
    r = grid.nodes()
    h = grid.h
    inv_h2 = 1.0 / (h * h)
    diagonal = 2.0 * inv_h2 + (l_alpha * l_alpha) / (r * r) + np.log(r)
    # zero-flux inner face: drop the (r_0 - h/2) face term from row 0
    diagonal[0] -= (r[0] - 0.5 * h) / r[0] * inv_h2
    faces = r[:-1] + 0.5 * h
    off_diagonal = -faces / np.sqrt(r[:-1] * r[1:]) * inv_h2
    return TridiagonalOperator(diagonal=diagonal, off_diagonal=off_diagonal, grid=grid)


@njit(cache=True)
def _count_below(diagonal, off_diagonal, x):
    """Number of eigenvalues strictly below x (Sturm sign count via LDL^T)."""
    count = 0
    q = diagonal[0] - x
    if q < 0.0:
        count += 1
    for i in range(1, diagonal.shape[0]):
        if q == 0.0:
            q = -1e-300
        q = diagonal[i] - x - off_diagonal[i - 1] * off_diagonal[i - 1] / q
        if q < 0.0:
            count += 1
    return count


def count_eigenvalues_below(op: TridiagonalOperator, x: float) -> int:
    return int(_count_below(op.diagonal, op.off_diagonal, float(x)))


def _gershgorin_bounds(op: TridiagonalOperator) -> tuple[float, float]:
    radius = np.zeros_like(op.diagonal)
    radius[:-1] += np.abs(op.off_diagonal)
    radius[1:] += np.abs(op.off_diagonal)
    return float(np.min(op.diagonal - radius)), float(np.max(op.diagonal + radius))


def lowest_eigenvalues(op: TridiagonalOperator, count: int, tol: float) -> list[float]:
    """The `count` smallest eigenvalues, each bisected to a width <= tol.

    Bisection on the Sturm count within the Gershgorin interval; fully
    deterministic and independent of any starting guess.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if count > op.size:
        raise ValueError(f"operator of size {op.size} has no {count} eigenvalues")
    lo_bound, hi_bound = _gershgorin_bounds(op)
    if not np.isfinite(lo_bound) or not np.isfinite(hi_bound):
        raise ConvergenceError(
            "operator entries are not finite; no eigenvalue bracket exists"
        )
    if count_eigenvalues_below(op, hi_bound + tol) < count:
        raise ConvergenceError(
            f"Gershgorin window [{lo_bound}, {hi_bound}] brackets fewer than "
            f"{count} eigenvalues; the operator is malformed"
        )
    eigenvalues: list[float] = []
    lo_k = lo_bound
    for k in range(count):
        lo, hi = lo_k, hi_bound
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            if mid <= lo or mid >= hi:
                break  # interval at floating-point resolution
            if count_eigenvalues_below(op, mid) <= k:
                lo = mid
            else:
                hi = mid
        eigenvalues.append(0.5 * (lo + hi))
        lo_k = lo  # the next eigenvalue cannot lie below this one
    return eigenvalues


def eigenvector(
    op: TridiagonalOperator,
    eigenvalue: float,
    max_steps: int = 50,
) -> np.ndarray:
    """Inverse-iteration eigenvector for a converged eigenvalue.

    Iterates (op - E I) v_next = v until successive unit vectors align to
    1 - |<v_k, v_k+1>| < 1e-14, then normalizes to sum v_i^2 h = 1 and fixes
    the global sign so the first component above the noise floor is positive.
    """
    n = op.size
    ab = np.zeros((3, n))
    ab[0, 1:] = op.off_diagonal
    ab[1, :] = op.diagonal - eigenvalue
    ab[2, :-1] = op.off_diagonal
    # deterministic start: fixed-seed noise never accidentally orthogonal
    # to the target eigenvector
    v = np.random.default_rng(20_240_817).standard_normal(n)
    v /= np.linalg.norm(v)
    alignment = 0.0
    for _ in range(max_steps):
        try:
            w = solve_banded((1, 1), ab, v)
        except np.linalg.LinAlgError:
            # exactly singular shift: nudge by one bisection width
            ab[1, :] += 1e-13 * max(1.0, abs(eigenvalue))
            w = solve_banded((1, 1), ab, v)
        w /= np.linalg.norm(w)
        alignment = abs(float(np.dot(v, w)))
        v = w
        if 1.0 - alignment < 1e-14:
            break
    else:
        raise ConvergenceError(
            f"inverse iteration did not align after {max_steps} steps "
            f"(last alignment 1 - {alignment:.3e})"
        )
    v /= np.sqrt(np.sum(v * v) * op.grid.h)
    significant = np.abs(v) > _NOISE_FLOOR * np.max(np.abs(v))
    first = int(np.argmax(significant))
    if v[first] < 0:
        v = -v
    return v


def count_radial_nodes(state: EigenState) -> int:
    """Interior sign changes of the radial function, noise-floor filtered."""
    v = state.radial_vector
    keep = np.abs(v) > _NOISE_FLOOR * np.max(np.abs(v))
    sig = v[keep]
    return int(np.sum(sig[:-1] * sig[1:] < 0.0))


def solve_state(
    alpha: RationalAlpha,
    l: int,
    n: int,
    config: SolverConfig | None = None,
) -> EigenState:
    """Solve one (alpha, l, n) bound state end to end."""
    return solve_block(alpha, l, n, config)[-1]


def solve_block(
    alpha: RationalAlpha,
    l: int,
    n_max: int,
    config: SolverConfig | None = None,
) -> list[EigenState]:
    """All states n = 1..n_max of one (alpha, l) channel, sharing the operator."""
    if config is None:
        config = default_config()
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    l_alpha = alpha.l_alpha_for(l)
    op = discretize(l_alpha, config.grid)
    energies = lowest_eigenvalues(op, n_max, config.eigenvalue_tolerance)
    states = []
    for n, energy in enumerate(energies, start=1):
        vec = eigenvector(op, energy, config.inverse_iteration_max_steps)
        states.append(
            EigenState(
                quantum=QuantumNumbers(n=n, l=l, l_alpha=l_alpha),
                alpha=alpha,
                energy=energy,
                radial_vector=vec,
                grid=config.grid,
            )
        )
    return states
