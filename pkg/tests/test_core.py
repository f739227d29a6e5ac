import math

import numpy as np
import pytest

from logatom.core import (
    QuantumNumbers,
    RadialGrid,
    SelectionRuleError,
    SolverConfig,
    default_config,
    default_grid,
    make_alpha,
    richardson,
)


class TestMakeAlpha:
    def test_reduces_to_lowest_terms(self):
        a = make_alpha(6, 8)
        assert (a.p, a.q) == (3, 4)
        assert str(a) == "3/4"
        assert a.value() == 0.75

    def test_euclidean_case(self):
        a = make_alpha(1, 1)
        assert a.is_euclidean()
        assert make_alpha(4, 4) == a

    def test_rejects_non_integers(self):
        with pytest.raises(TypeError):
            make_alpha(0.75, 1)
        with pytest.raises(TypeError):
            make_alpha(3, "4")

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            make_alpha(0, 5)
        with pytest.raises(ValueError):
            make_alpha(3, -4)

    def test_rejects_alpha_above_one(self):
        with pytest.raises(ValueError, match="outside the deficit-angle model"):
            make_alpha(5, 4)

    def test_warns_at_and_below_one_half(self):
        with pytest.warns(UserWarning, match="supermassive"):
            make_alpha(1, 2)
        with pytest.warns(UserWarning):
            make_alpha(2, 5)

    def test_no_warning_inside_window(self, recwarn):
        make_alpha(3, 5)
        make_alpha(1, 1)
        assert len(recwarn) == 0


class TestSelectionMapping:
    def test_exact_integer_map(self):
        a = make_alpha(3, 5)
        assert a.l_alpha_for(0) == 0
        assert a.l_alpha_for(3) == 5
        assert a.l_alpha_for(6) == 10
        assert a.l_alpha_for(9) == 15

    def test_violation_names_nearest_allowed(self):
        a = make_alpha(3, 5)
        with pytest.raises(SelectionRuleError, match=r"nearest allowed: 3 and 6"):
            a.l_alpha_for(4)

    def test_euclidean_allows_everything(self):
        a = make_alpha(1, 1)
        for l in range(12):
            assert a.l_alpha_for(l) == l


def test_quantum_numbers_require_n_at_least_one():
    QuantumNumbers(n=1, l=0, l_alpha=0)
    with pytest.raises(ValueError):
        QuantumNumbers(n=0, l=0, l_alpha=0)


class TestRadialGrid:
    def test_spacing_and_endpoints(self):
        g = RadialGrid(r_min=0.01, r_max=10.0, n_points=1000)
        assert g.h == pytest.approx((10.0 - 0.01) / 999, rel=0, abs=0)
        nodes = g.nodes()
        assert nodes.shape == (1000,)
        assert nodes[0] == 0.01
        # accumulated rounding in r_min + i*h stays within a few ulp
        assert abs(nodes[-1] - 10.0) <= 4 * np.spacing(10.0)

    def test_default_grid_layout(self):
        g = default_grid()
        assert g.n_points == 20000
        assert g.r_min == g.h
        nodes = g.nodes()
        assert nodes[0] == g.h
        assert abs(nodes[-1] - 50.0) <= 4 * np.spacing(50.0)

    def test_rejects_bad_bounds(self):
        with pytest.raises(ValueError):
            RadialGrid(r_min=0.0, r_max=1.0, n_points=10)
        with pytest.raises(ValueError):
            RadialGrid(r_min=-0.1, r_max=1.0, n_points=10)
        with pytest.raises(ValueError):
            RadialGrid(r_min=2.0, r_max=1.0, n_points=10)
        with pytest.raises(ValueError):
            RadialGrid(r_min=0.1, r_max=1.0, n_points=1)


def test_solver_config_validation():
    cfg = default_config()
    assert cfg.max_states == 5
    with pytest.raises(ValueError):
        SolverConfig(grid=default_grid(), eigenvalue_tolerance=0.0)
    with pytest.raises(ValueError):
        SolverConfig(grid=default_grid(), max_states=0)


def test_richardson_algebra():
    # order 2: fine + (fine - coarse)/3
    assert richardson(1.0, 0.0, 2) == pytest.approx(-1.0 / 3.0)
    # exact for a pure h^order error: E(h) = e + c h^p
    e, c = 2.5, 0.7
    for order in (2, 4):
        coarse = e + c * 0.1**order
        fine = e + c * 0.05**order
        assert richardson(coarse, fine, order) == pytest.approx(e, abs=1e-14)


def test_richardson_matches_geometric_limit():
    seq = [math.exp(-(0.2 / 2**k) ** 2) for k in range(3)]
    improved = richardson(seq[0], seq[1], 2)
    assert abs(improved - 1.0) < abs(seq[1] - 1.0)
