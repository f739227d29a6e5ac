"""Shared value types for the conical logarithmic atom.

Everything downstream (selection rules, solvers, observables, CLI) builds on
the four small immutable types defined here plus a handful of named defaults.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

# Default discretization: box large enough that the widest tabulated state
# (largest <r^2> about 385) has negligible weight at the wall.
DEFAULT_R_MAX = 50.0
DEFAULT_N_POINTS = 20000
DEFAULT_EIGENVALUE_TOL = 1e-10
DEFAULT_MAX_STATES = 5
DEFAULT_INVERSE_ITERATION_STEPS = 50

# The deficit factor below 1/2 corresponds to the supermassive regime; it is
# constructible but outside the studied window, so we only warn.
SUPERMASSIVE_ALPHA_THRESHOLD = 0.5


class LogatomError(Exception):
    """Base class for package errors."""


class SelectionRuleError(LogatomError):
    """(l, alpha) pair violates the integer quantization l = k*p."""


class ConvergenceError(LogatomError):
    """An iterative solver failed to reach its tolerance."""


class MaterialFileError(LogatomError):
    """Material data file failed schema validation (message carries line info)."""


@dataclass(frozen=True)
class RationalAlpha:
    """Deficit factor alpha = p/q stored in lowest terms, 0 < alpha <= 1."""

    p: int
    q: int

    def value(self) -> float:
        return self.p / self.q

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"

    def is_euclidean(self) -> bool:
        return self.p == self.q

    def l_alpha_for(self, l: int) -> int:
        """Exact effective angular quantum number l/alpha = l*q/p.

        Raises SelectionRuleError when l is not a multiple of p, naming the
        two nearest allowed l values.
        """
        if l % self.p != 0:
            below = (l // self.p) * self.p
            above = below + self.p
            raise SelectionRuleError(
                f"l={l} is not allowed for alpha={self}: l must be a multiple "
                f"of {self.p} (nearest allowed: {below} and {above})"
            )
        return (l // self.p) * self.q


def make_alpha(p: int, q: int) -> RationalAlpha:
    """Build alpha = p/q, reduced to lowest terms.

    Rejects nonpositive input and p > q (a deficit factor cannot exceed 1).
    Values at or below 1/2 are allowed but warn, since the spectrum tables in
    this package target the window 1/2 < alpha <= 1.
    """
    if not (isinstance(p, int) and isinstance(q, int)):
        raise TypeError("p and q must be integers")
    if p < 1 or q < 1:
        raise ValueError(f"p and q must be positive, got p={p}, q={q}")
    if p > q:
        raise ValueError(f"alpha = {p}/{q} > 1 is outside the deficit-angle model")
    g = math.gcd(p, q)
    p, q = p // g, q // g
    if p / q <= SUPERMASSIVE_ALPHA_THRESHOLD:
        warnings.warn(
            f"alpha = {p}/{q} <= 1/2 lies in the supermassive regime, outside "
            "the studied window (1/2, 1]",
            stacklevel=2,
        )
    return RationalAlpha(p, q)


@dataclass(frozen=True)
class QuantumNumbers:
    """(n, l, l_alpha) triple labeling one bound state. n counts from 1."""

    n: int
    l: int
    l_alpha: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"radial quantum number must satisfy n >= 1, got {self.n}")


@dataclass(frozen=True)
class RadialGrid:
    """Uniform grid r_i = r_min + i*h, i = 0..n_points-1, r_last = r_max.

    Both boundaries live off the grid, so every stored node is an unknown of
    the discretized problem: the inner edge is the cell face at r_min - h/2
    (where the solver closes the operator), the outer edge a Dirichlet zero
    at the ghost node r_max + h.
    """

    r_min: float
    r_max: float
    n_points: int
    h: float = field(init=False)

    def __post_init__(self):
        if self.n_points < 2:
            raise ValueError("grid needs at least 2 points")
        if not (0.0 < self.r_min < self.r_max):
            raise ValueError(
                f"need 0 < r_min < r_max, got r_min={self.r_min}, r_max={self.r_max}"
            )
        object.__setattr__(
            self, "h", (self.r_max - self.r_min) / (self.n_points - 1)
        )

    def nodes(self) -> np.ndarray:
        return self.r_min + self.h * np.arange(self.n_points)


def default_grid() -> RadialGrid:
    """The documented default: r_min = h, r_max = 50, 20000 nodes.

    r_min = h makes the nodes r_i = (i+1)*h with h = r_max/n_points, i.e. the
    first node sits one spacing away from the origin.
    """
    h = DEFAULT_R_MAX / DEFAULT_N_POINTS
    return RadialGrid(r_min=h, r_max=DEFAULT_R_MAX, n_points=DEFAULT_N_POINTS)


@dataclass(frozen=True)
class SolverConfig:
    grid: RadialGrid
    eigenvalue_tolerance: float = DEFAULT_EIGENVALUE_TOL
    max_states: int = DEFAULT_MAX_STATES
    inverse_iteration_max_steps: int = DEFAULT_INVERSE_ITERATION_STEPS

    def __post_init__(self):
        if self.eigenvalue_tolerance <= 0:
            raise ValueError("eigenvalue_tolerance must be positive")
        if self.max_states < 1:
            raise ValueError("max_states must be >= 1")


def default_config() -> SolverConfig:
    return SolverConfig(grid=default_grid())


def richardson(coarse: float, fine: float, order: int) -> float:
    """Eliminate the leading O(h^order) error from a grid-halving pair."""
    return fine + (fine - coarse) / (2 ** order - 1)
