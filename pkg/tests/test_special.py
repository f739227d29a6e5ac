"""Checks for the from-scratch J0 / Y0 / H0 implementations.

The deep accuracy sweep against the extended-precision oracles lives in the
acceptance suite; here we pin spot values, branch seams, limiting forms, and
domain handling.
"""
import math

import numpy as np
import pytest

from logatom.special import (
    H0_CROSSOVER,
    J0_Y0_CROSSOVER,
    bessel_j0,
    bessel_y0,
    struve_h0,
    struve_h0_minus_y0,
)
from oracles import oracle_h0, oracle_j0, oracle_y0

# classic handbook values
J0_AT_1 = 0.7651976865579666
Y0_AT_1 = 0.08825696421567696
H0_AT_1 = 0.5686566270482879


def test_spot_values():
    assert bessel_j0(1.0) == pytest.approx(J0_AT_1, abs=1e-12)
    assert bessel_y0(1.0) == pytest.approx(Y0_AT_1, abs=1e-12)
    assert struve_h0(1.0) == pytest.approx(H0_AT_1, abs=1e-11)
    assert bessel_j0(0.0) == 1.0
    assert struve_h0(0.0) == 0.0


def test_domain_errors():
    with pytest.raises(ValueError):
        bessel_j0(-1.0)
    with pytest.raises(ValueError):
        bessel_y0(0.0)
    with pytest.raises(ValueError):
        bessel_y0(-2.0)
    with pytest.raises(ValueError):
        struve_h0(-0.5)
    with pytest.raises(ValueError):
        struve_h0_minus_y0(0.0)


@pytest.mark.parametrize("x", [1e-6, 1e-3, 0.1, 1.0, 5.0, 12.0, 14.0, 25.0, 60.0, 100.0])
def test_against_oracles(x):
    assert abs(bessel_j0(x) - float(oracle_j0(x))) < 1e-9
    assert abs(bessel_y0(x) - float(oracle_y0(x))) < 1e-9
    assert abs(struve_h0(x) - float(oracle_h0(x))) < 1e-9


@pytest.mark.parametrize("crossover", [J0_Y0_CROSSOVER, H0_CROSSOVER])
def test_branch_seams(crossover):
    """Series and asymptotic branches agree where the implementation switches."""
    eps = 1e-12 * crossover
    for fn in (bessel_j0, bessel_y0, struve_h0, struve_h0_minus_y0):
        left = fn(crossover - eps)
        right = fn(crossover + eps)
        assert abs(left - right) < 1e-10


def test_y0_log_singularity():
    # Y0 ~ (2/pi)(ln(x/2) + gamma) for x -> 0, with O(x^2) corrections
    gamma = 0.5772156649015329
    for x in (1e-6, 1e-5):
        lead = (2.0 / math.pi) * (math.log(x / 2.0) + gamma)
        assert abs(bessel_y0(x) - lead) < 1e-9


def test_h0_linear_at_origin():
    # H0 ~ 2x/pi for small x
    for x in (1e-8, 1e-6):
        assert struve_h0(x) == pytest.approx(2.0 * x / math.pi, rel=1e-10)


def test_y0_first_zero():
    lo, hi = 0.5, 1.2
    assert bessel_y0(lo) < 0 < bessel_y0(hi)
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if bessel_y0(mid) < 0:
            lo = mid
        else:
            hi = mid
    assert 0.5 * (lo + hi) == pytest.approx(0.8935769662791675, abs=1e-10)


def test_kernel_positive_and_coulomb_limit():
    xs = np.geomspace(1e-6, 1e3, 120)
    vals = np.array([struve_h0_minus_y0(float(x)) for x in xs])
    assert np.all(vals > 0)
    # H0 - Y0 -> 2/(pi x) at large argument
    x = 50.0
    assert struve_h0_minus_y0(x) == pytest.approx(2.0 / (math.pi * x), rel=1e-3)
    x = 500.0
    assert struve_h0_minus_y0(x) == pytest.approx(2.0 / (math.pi * x), rel=1e-5)


def test_kernel_consistent_with_parts():
    # below the H0 crossover both readings exist; the dedicated difference
    # carries less cancellation but must agree to the parts' own accuracy
    for x in (0.5, 3.0, 15.0):
        assert struve_h0_minus_y0(x) == pytest.approx(
            struve_h0(x) - bessel_y0(x), abs=5e-11
        )


def test_kernel_log_form_at_small_argument():
    # (pi/2)(H0 - Y0) = -(ln(x/2) + gamma) + x + O(x^2 ln x) as x -> 0;
    # the linear term comes from H0 ~ 2x/pi
    gamma = 0.5772156649015329
    for x in (1e-4, 1e-6):
        lhs = 0.5 * math.pi * struve_h0_minus_y0(x)
        assert lhs == pytest.approx(-(math.log(x / 2.0) + gamma) + x, rel=1e-8)


def test_oracles_agree_with_mpmath():
    mp = pytest.importorskip("mpmath")
    for x in (0.3, 2.0, 17.0, 64.0):
        assert abs(float(oracle_j0(x)) - float(mp.besselj(0, x))) < 1e-18
        assert abs(float(oracle_y0(x)) - float(mp.bessely(0, x))) < 1e-18
        assert abs(float(oracle_h0(x)) - float(mp.struveh(0, x))) < 1e-18
