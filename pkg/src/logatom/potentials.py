"""Interaction models: bare log, conical effective, 3D Coulomb, screened 2D.

Dimensionless models (log2d, effective) feed the solver; the SI models
(coulomb3d, rk, rk-log) take lengths in nanometers and return energies in
electron-volts. The screened-interaction kernel H0 - Y0 comes from the
from-scratch special functions in this package, not an external library.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .special import (  # noqa: F401  (re-exported: public surface of this module)
    bessel_j0,
    bessel_y0,
    struve_h0,
    struve_h0_minus_y0,
)
from .units import COULOMB_EV_NM

ArrayLike = Union[float, np.ndarray]

VARIANTS = ("log2d", "effective", "coulomb3d", "rk", "rk-log")


def _check_positive(r: ArrayLike, what: str = "r") -> None:
    if np.any(np.asarray(r) <= 0.0):
        raise ValueError(f"{what} must be positive")


def log2d(r: ArrayLike) -> ArrayLike:
    """Bare planar log interaction, dimensionless gauge: V = ln r."""
    _check_positive(r)
    return np.log(r) if isinstance(r, np.ndarray) else math.log(r)


def effective_potential(r: ArrayLike, l_alpha: int) -> ArrayLike:
    """Radial-equation potential (l_alpha^2 - 1/4)/r^2 + ln r, dimensionless.

    The -1/4 comes from reducing the planar problem to a half-line one; it
    makes the l_alpha = 0 channel weakly attractive at short range while the
    log term still confines everything.
    """
    _check_positive(r)
    coeff = l_alpha * l_alpha - 0.25
    if isinstance(r, np.ndarray):
        return coeff / (r * r) + np.log(r)
    return coeff / (r * r) + math.log(r)


def effective_potential_minimum(l_alpha: int) -> float:
    """Location of the potential minimum, sqrt(2(l_alpha^2 - 1/4)), l_alpha >= 1."""
    if l_alpha < 1:
        raise ValueError("the l_alpha = 0 channel has no interior minimum")
    return math.sqrt(2.0 * (l_alpha * l_alpha - 0.25))


def effective_potential_derivative(r: ArrayLike, l_alpha: int) -> ArrayLike:
    """dV/dr = -2(l_alpha^2 - 1/4)/r^3 + 1/r."""
    _check_positive(r)
    coeff = l_alpha * l_alpha - 0.25
    return -2.0 * coeff / (r * r * r) + 1.0 / r


def coulomb3d(r: ArrayLike, kappa: float = 1.0) -> ArrayLike:
    """Unscreened -e^2/(4 pi eps0 kappa r); r in nm, result in eV."""
    _check_positive(r)
    return -COULOMB_EV_NM / (kappa * r)


def rk_log_approx(r: ArrayLike, r_s: float, kappa: float = 1.0) -> ArrayLike:
    """Short-range logarithmic form of the screened planar interaction.

    (e^2/(4 pi eps0 kappa)) (1/r_s) [ln(r/(2 r_s)) + gamma]; r, r_s in nm,
    result in eV. Crosses zero exactly at r = 2 r_s e^{-gamma}.
    """
    _check_positive(r)
    _check_positive(r_s, "r_s")
    if kappa < 1:
        raise ValueError(f"kappa must be >= 1, got {kappa}")
    log_term = np.log(r / (2.0 * r_s)) if isinstance(r, np.ndarray) else math.log(
        r / (2.0 * r_s)
    )
    return (COULOMB_EV_NM / (kappa * r_s)) * (log_term + 0.5772156649015329)


def rk_full(r: ArrayLike, r_s: float, kappa: float = 1.0) -> ArrayLike:
    """Full screened planar interaction -(e^2/(4 pi eps0 kappa)) (pi/(2 r_s)) [H0 - Y0].

    r, r_s in nm, result in eV. Logarithmic below r_s, Coulombic far above.
    """
    _check_positive(r)
    _check_positive(r_s, "r_s")
    if kappa < 1:
        raise ValueError(f"kappa must be >= 1, got {kappa}")
    pref = -COULOMB_EV_NM / (kappa * r_s) * (math.pi / 2.0)
    if isinstance(r, np.ndarray):
        kernel = np.array([struve_h0_minus_y0(float(x) / r_s) for x in r.ravel()])
        return pref * kernel.reshape(r.shape)
    return pref * struve_h0_minus_y0(r / r_s)


@dataclass(frozen=True)
class PotentialSpec:
    """One interaction model plus the parameters it needs.

    variant: one of 'log2d', 'effective', 'coulomb3d', 'rk', 'rk-log'.
    l_alpha applies to 'effective'; r_s and kappa to the SI models.
    """

    variant: str
    l_alpha: int = 0
    r_s: Optional[float] = None
    kappa: float = 1.0

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(
                f"unknown potential variant {self.variant!r}; choose from {VARIANTS}"
            )
        if self.variant in ("rk", "rk-log"):
            if self.r_s is None or self.r_s <= 0:
                raise ValueError(f"variant {self.variant!r} needs r_s > 0")
        if self.variant in ("rk", "rk-log", "coulomb3d") and self.kappa < 1:
            raise ValueError(f"variant {self.variant!r} needs kappa >= 1")

    def evaluate(self, r: ArrayLike) -> ArrayLike:
        if self.variant == "log2d":
            return log2d(r)
        if self.variant == "effective":
            return effective_potential(r, self.l_alpha)
        if self.variant == "coulomb3d":
            return coulomb3d(r, self.kappa)
        if self.variant == "rk":
            return rk_full(r, self.r_s, self.kappa)
        return rk_log_approx(r, self.r_s, self.kappa)
