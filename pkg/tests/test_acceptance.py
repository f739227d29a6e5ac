"""Acceptance gate: one test per shipped guarantee, one printed verdict line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the verdict lines
inline; under plain `pytest` they still print around the progress dots.
Each test re-derives its numbers through the public API at the documented
default settings; nothing here reuses cached fixtures except where a
criterion explicitly targets the default-grid states (the `blocks` fixture
is exactly that sweep).
"""
import math
import time
from pathlib import Path

import numpy as np
import pytest

from logatom import (
    EULER_GAMMA,
    bessel_j0,
    bessel_y0,
    count_radial_nodes,
    default_grid,
    discretize,
    expectation_r_power,
    lowest_eigenvalues,
    make_alpha,
    richardson,
    shoot_eigenvalue,
    solve_block,
    struve_h0,
)
from logatom.core import RadialGrid
from logatom.potentials import coulomb3d, rk_full, rk_log_approx
from logatom.special import H0_CROSSOVER, J0_Y0_CROSSOVER
from logatom.units import _dimensionless_level, exciton_energy_si, load_materials

from oracles import oracle_h0, oracle_j0, oracle_y0
from reference_data import EXCITON_TARGETS, REF_E, REF_R, REF_R2


def report(capsys, label, ok, detail):
    with capsys.disabled():
        print(f"\nACCEPTANCE {label}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"{label}: {detail}"


def test_criterion_01_energy_table(capsys):
    """All 30 tabulated levels within 2e-4 on the default grid, under 10 s."""
    solve_block(make_alpha(1, 1), 0, 1)  # JIT warm-up outside the clock
    start = time.perf_counter()
    worst = 0.0
    for l_alpha in range(6):
        states = solve_block(make_alpha(1, 1), l_alpha, 5)
        for ref, state in zip(REF_E[l_alpha], states):
            worst = max(worst, abs(state.energy - ref))
    elapsed = time.perf_counter() - start
    ok = worst <= 2e-4 and elapsed < 10.0
    report(
        capsys, "1 (energy table)", ok,
        f"30 levels, worst |dE| = {worst:.3e} (tol 2e-4), {elapsed:.2f} s (limit 10 s)",
    )


def test_criterion_02_moment_tables(blocks, capsys):
    """Tabulated <r> and <r^2> reproduced with mixed absolute/relative tolerance."""
    worst_r = worst_r2 = 0.0
    for l_alpha, states in blocks.items():
        for ref_r, ref_r2, state in zip(REF_R[l_alpha], REF_R2[l_alpha], states):
            err_r = abs(expectation_r_power(state, 1) - ref_r) / (1e-3 * (1 + ref_r))
            err_r2 = abs(expectation_r_power(state, 2) - ref_r2) / (
                2e-3 * (1 + ref_r2)
            )
            worst_r = max(worst_r, err_r)
            worst_r2 = max(worst_r2, err_r2)
    ok = worst_r <= 1.0 and worst_r2 <= 1.0
    report(
        capsys, "2 (moment tables)", ok,
        f"worst <r> at {worst_r:.2f} and <r^2> at {worst_r2:.2f} of tolerance",
    )


def test_criterion_03_conical_degeneracy(blocks, capsys):
    """(alpha = 3/4, l = 3) is level-by-level degenerate with (alpha = 1, l = 4)."""
    cone = solve_block(make_alpha(3, 4), 3, 5)
    plane = blocks[4]
    worst = max(abs(a.energy - b.energy) for a, b in zip(cone, plane))
    ok = worst <= 1e-10
    report(
        capsys, "3 (conical degeneracy)", ok,
        f"n = 1..5 split by at most {worst:.2e} (tol 1e-10)",
    )


def test_criterion_04_dual_route_agreement(capsys):
    """Finite differences vs shooting on every table entry: raw levels within
    1e-4, Richardson-extrapolated ones within 1e-5."""
    coarse = default_grid()
    fine = RadialGrid(r_min=25.0 / 20000, r_max=50.0, n_points=40000)
    worst_raw = worst_rich = 0.0
    for l_alpha in range(6):
        fdm_c = lowest_eigenvalues(discretize(l_alpha, coarse), 5, 1e-10)
        fdm_f = lowest_eigenvalues(discretize(l_alpha, fine), 5, 1e-10)
        for n in range(1, 6):
            num_c = shoot_eigenvalue(l_alpha, n, coarse, tol=1e-12)
            num_f = shoot_eigenvalue(l_alpha, n, fine, tol=1e-12)
            worst_raw = max(worst_raw, abs(fdm_c[n - 1] - num_c))
            worst_rich = max(
                worst_rich,
                abs(
                    richardson(fdm_c[n - 1], fdm_f[n - 1], 2)
                    - richardson(num_c, num_f, 4)
                ),
            )
    ok = worst_raw <= 1e-4 and worst_rich <= 1e-5
    report(
        capsys, "4 (dual-route agreement)", ok,
        f"30 entries, worst raw {worst_raw:.3e} (tol 1e-4), "
        f"worst extrapolated {worst_rich:.3e} (tol 1e-5)",
    )


def test_criterion_05_convergence_orders(capsys):
    """Error-ratio measurements confirm O(h^2) for the grid solver and O(h^4)
    for the shooting integrator on the (l_alpha = 1, n = 1) level."""
    fdm = [
        lowest_eigenvalues(
            discretize(1, RadialGrid(r_min=50.0 / n, r_max=50.0, n_points=n)),
            1,
            1e-12,
        )[0]
        for n in (5000, 10000, 20000)
    ]
    fdm_ratio = (fdm[0] - fdm[1]) / (fdm[1] - fdm[2])
    num = [
        shoot_eigenvalue(1, 1, RadialGrid(r_min=0.0025, r_max=50.0, n_points=n),
                         tol=1e-13)
        for n in (250, 500, 1000)
    ]
    num_ratio = (num[0] - num[1]) / (num[1] - num[2])
    ok = 3.5 <= fdm_ratio <= 4.5 and 12.0 <= num_ratio <= 20.0
    report(
        capsys, "5 (convergence orders)", ok,
        f"grid-solver ratio {fdm_ratio:.3f} (want [3.5, 4.5]), "
        f"shooting ratio {num_ratio:.2f} (want [12, 20])",
    )


def test_criterion_06_ground_state_constant(blocks, capsys):
    """E_10 + gamma = 1.104 to 5e-4, and the README contrasts it with the
    variational bound 3/2."""
    value = blocks[0][0].energy + EULER_GAMMA
    readme = (Path(__file__).resolve().parents[1] / "README.md").read_text(
        encoding="utf-8"
    )
    ok = abs(value - 1.104) <= 5e-4 and "1.104" in readme and "3/2" in readme
    report(
        capsys, "6 (ground-state constant)", ok,
        f"E_10 + gamma = {value:.6f} vs 1.104 (tol 5e-4); README contrast "
        f"{'present' if ('1.104' in readme and '3/2' in readme) else 'missing'}",
    )


def test_criterion_07_exciton_binding_energies(capsys):
    """Eight published TMD binding energies reproduced to 1e-4 eV."""
    mats = {(m.name, m.substrate): m for m in load_materials()}
    e_1s = _dimensionless_level(1, 0)
    worst = 0.0
    for name, substrate, _, binding in EXCITON_TARGETS:
        got = exciton_energy_si(e_1s, mats[(name, substrate)])
        worst = max(worst, abs(got + binding))
    ok = worst <= 1e-4
    report(
        capsys, "7 (exciton energies)", ok,
        f"8 binding energies, worst |dE| = {worst:.2e} eV (tol 1e-4)",
    )


@pytest.mark.xfail(
    strict=True,
    reason="the logarithmic approximation deviates from the full screened "
    "kernel by 3.6% at r = r_s/10; the 2% figure is reached around r_s/20, "
    "so this clause fails as stated for any r_s (see the relative-gap data "
    "in test_potentials.test_rk_full_limits)",
)
def test_criterion_08a_log_regime_within_two_percent(capsys):
    r_s = 1.0
    r = r_s / 10.0
    gap = abs(rk_full(r, r_s) - rk_log_approx(r, r_s)) / abs(rk_full(r, r_s))
    report(
        capsys, "8a (log regime at r_s/10)", gap < 0.02,
        f"relative gap {gap:.4f} (stated tol 0.02); holds only below ~r_s/20",
    )


def test_criterion_08b_coulomb_regime(capsys):
    r_s = 1.0
    r = 100.0 * r_s
    ratio = rk_full(r, r_s) / coulomb3d(r)
    ok = 0.98 <= ratio <= 1.02
    report(
        capsys, "8b (Coulomb regime at 100 r_s)", ok,
        f"screened/Coulomb ratio {ratio:.5f} (want [0.98, 1.02])",
    )


def test_criterion_09_special_functions(capsys):
    """From-scratch J0, Y0, H0 match extended-precision series oracles to
    1e-9 absolute over [1e-6, 100]; branch seams agree to 1e-10."""
    xs = list(np.geomspace(1e-6, 100.0, 90)) + [
        J0_Y0_CROSSOVER - 1e-9, J0_Y0_CROSSOVER + 1e-9,
        H0_CROSSOVER - 1e-9, H0_CROSSOVER + 1e-9,
    ]
    worst = 0.0
    for x in xs:
        worst = max(
            worst,
            abs(bessel_j0(x) - float(oracle_j0(x))),
            abs(bessel_y0(x) - float(oracle_y0(x))),
            abs(struve_h0(x) - float(oracle_h0(x))),
        )
    seam = 0.0
    eps = 1e-12
    for fn in (bessel_j0, bessel_y0):
        seam = max(seam, abs(fn(J0_Y0_CROSSOVER - eps) - fn(J0_Y0_CROSSOVER + eps)))
    seam = max(seam, abs(struve_h0(H0_CROSSOVER - eps) - struve_h0(H0_CROSSOVER + eps)))
    ok = worst <= 1e-9 and seam <= 1e-10
    report(
        capsys, "9 (special functions)", ok,
        f"worst |err| = {worst:.2e} over 94 points (tol 1e-9), "
        f"worst seam jump {seam:.2e} (tol 1e-10)",
    )


def test_criterion_10_randomized_properties(capsys):
    """50 random admissible (alpha, l, n) triples satisfy the structural
    invariants: node rule, normalization, Cauchy-Schwarz, monotone energies,
    exact integer selection identity."""
    rng = np.random.default_rng(20250819)
    triples = []
    while len(triples) < 50:
        p = int(rng.integers(1, 10))
        q = int(rng.integers(p, 2 * p))
        if math.gcd(p, q) != 1:
            continue
        k = int(rng.integers(0, 4))
        n = int(rng.integers(1, 5))
        triples.append((p, q, k, n))

    cache = {}
    checked = 0
    for p, q, k, n in triples:
        alpha = make_alpha(p, q)
        l = k * alpha.p
        l_alpha = alpha.l_alpha_for(l)
        assert l_alpha * alpha.p == l * alpha.q  # exact integer identity
        if l_alpha not in cache:
            cache[l_alpha] = solve_block(alpha, l, 4)
        state = cache[l_alpha][n - 1]
        assert count_radial_nodes(state) == n - 1
        norm = float(np.sum(state.radial_vector**2) * state.grid.h)
        assert abs(norm - 1.0) <= 1e-10
        r1 = expectation_r_power(state, 1)
        r2 = expectation_r_power(state, 2)
        assert r1 * r1 <= r2
        checked += 1

    for states in cache.values():
        energies = [s.energy for s in states]
        assert energies == sorted(energies)
    ladder_ok = True
    for n in range(4):
        ladder = [cache[la][n].energy for la in sorted(cache)]
        ladder_ok = ladder_ok and ladder == sorted(ladder)
    assert ladder_ok
    report(
        capsys, "10 (randomized properties)", checked >= 50 and ladder_ok,
        f"{checked} triples over {len(cache)} distinct channels "
        f"(l_alpha up to {max(cache)}), all invariants held",
    )
