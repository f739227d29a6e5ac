"""Command-line surface: solve, rules, potential, exciton, profile.

Data goes to stdout, diagnostics to stderr. Exit codes: 0 success, 2 bad
flags or parameter domains, 3 selection-rule violations, 4 solver
non-convergence, 5 material-file schema violations. Identical invocations
produce byte-identical output.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

import numpy as np

from . import observables, selection, units
from .core import (
    ConvergenceError,
    MaterialFileError,
    RadialGrid,
    SelectionRuleError,
    SolverConfig,
    default_grid,
    make_alpha,
)
from .fdm_solver import solve_block
from .potentials import PotentialSpec
from .shooting_oracle import shoot_eigenvalue


def _parse_alpha(text: str) -> tuple[int, int]:
    parts = text.split("/")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(
            f"alpha must look like p/q (e.g. 3/4), got {text!r}"
        )
    try:
        p, q = int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"alpha must be a ratio of integers, got {text!r}")
    return p, q


def _parse_grid(text: str) -> RadialGrid:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(
            f"grid must look like r_max,points (e.g. 50,20000), got {text!r}"
        )
    try:
        r_max = float(parts[0])
        n_points = int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"could not parse grid spec {text!r}")
    if r_max <= 0 or n_points < 2:
        raise argparse.ArgumentTypeError("grid needs r_max > 0 and points >= 2")
    h = r_max / n_points
    return RadialGrid(r_min=h, r_max=r_max, n_points=n_points)


def _parse_range(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(
            f"range must look like lo:hi:steps, got {text!r}"
        )
    try:
        lo, hi, steps = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError(f"could not parse range {text!r}")
    if steps < 2 or hi <= lo:
        raise argparse.ArgumentTypeError("range needs hi > lo and steps >= 2")
    return lo, hi, steps


def _fmt(x: float) -> str:
    """Full-precision decimal text that round-trips the float exactly."""
    return repr(float(x))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="logatom",
        description="Bound states of the planar logarithmic atom on a cone.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve bound states of one (alpha, l) channel")
    p_solve.add_argument("--alpha", type=_parse_alpha, required=True, metavar="P/Q")
    p_solve.add_argument("--l", type=int, required=True)
    p_solve.add_argument("--n-max", type=int, default=1)
    p_solve.add_argument("--grid", type=_parse_grid, default=None, metavar="R_MAX,POINTS")
    p_solve.add_argument(
        "--verify",
        action="store_true",
        help="cross-check each level against the independent shooting integrator",
    )
    p_solve.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p_solve.set_defaults(func=cmd_solve)

    p_rules = sub.add_parser("rules", help="list allowed (l, alpha, l_alpha) rows")
    p_rules.add_argument("--l-max", type=int, default=None)
    p_rules.add_argument("--alpha", type=_parse_alpha, default=None, metavar="P/Q")
    p_rules.add_argument(
        "--q-max",
        type=int,
        default=None,
        help="cap on the denominator when enumerating alphas (default: no cap)",
    )
    p_rules.set_defaults(func=cmd_rules)

    p_pot = sub.add_parser("potential", help="emit (r, V) CSV for one interaction model")
    p_pot.add_argument(
        "--model",
        choices=("effective", "log2d", "coulomb3d", "rk", "rk-log"),
        required=True,
    )
    p_pot.add_argument("--l-alpha", type=int, default=0)
    p_pot.add_argument("--r-s", type=float, default=None, help="screening length (nm)")
    p_pot.add_argument("--kappa", type=float, default=1.0)
    p_pot.add_argument("--r-range", type=_parse_range, required=True, metavar="LO:HI:STEPS")
    p_pot.add_argument(
        "--log-spacing", action="store_true", help="sample r geometrically"
    )
    p_pot.set_defaults(func=cmd_potential)

    p_exc = sub.add_parser("exciton", help="exciton energies from a material file")
    p_exc.add_argument(
        "--materials",
        default=None,
        metavar="FILE",
        help="material JSON (default: the shipped data file)",
    )
    p_exc.add_argument(
        "--sweep-kappa",
        type=_parse_range,
        default=None,
        metavar="LO:HI:STEPS",
        help="emit a dielectric sweep CSV (geometric kappa spacing)",
    )
    p_exc.add_argument("--states", default="1s", help="comma list like 1s,2s,3s,4s")
    p_exc.set_defaults(func=cmd_exciton)

    p_prof = sub.add_parser("profile", help="radial density CSV, or a disk raster")
    p_prof.add_argument("--alpha", type=_parse_alpha, required=True, metavar="P/Q")
    p_prof.add_argument("--l", type=int, required=True)
    p_prof.add_argument("--n-max", type=int, default=1)
    p_prof.add_argument("--grid", type=_parse_grid, default=None, metavar="R_MAX,POINTS")
    p_prof.add_argument(
        "--disk",
        type=int,
        default=None,
        metavar="RES",
        help="emit an (x, y, density) raster of the n = n-max state instead",
    )
    p_prof.set_defaults(func=cmd_profile)

    return parser


def _config_from(args) -> SolverConfig:
    grid = args.grid if args.grid is not None else default_grid()
    return SolverConfig(grid=grid)


def _solve_rows(args):
    alpha = make_alpha(*args.alpha)
    config = _config_from(args)
    states = solve_block(alpha, args.l, args.n_max, config)
    rows = []
    for state in states:
        row = {
            "alpha": str(alpha),
            "l": state.quantum.l,
            "l_alpha": state.quantum.l_alpha,
            "n": state.quantum.n,
            "energy": state.energy,
            "r_mean": observables.expectation_r_power(state, 1),
            "r2_mean": observables.expectation_r_power(state, 2),
        }
        if args.verify:
            oracle = shoot_eigenvalue(
                state.quantum.l_alpha, state.quantum.n, config.grid
            )
            row["delta_numerov"] = state.energy - oracle
        rows.append(row)
    return rows


def cmd_solve(args) -> int:
    if args.n_max < 1:
        print("error: --n-max must be >= 1", file=sys.stderr)
        return 2
    rows = _solve_rows(args)
    if args.format == "json":
        print(json.dumps(rows, indent=2))
        return 0
    keys = list(rows[0].keys())
    if args.format == "csv":
        print(",".join(keys))
        for row in rows:
            print(
                ",".join(
                    _fmt(row[k]) if isinstance(row[k], float) else str(row[k])
                    for k in keys
                )
            )
        return 0
    header = f"alpha = {rows[0]['alpha']}   l = {rows[0]['l']}   l_alpha = {rows[0]['l_alpha']}"
    print(header)
    cols = ["n", "energy", "<r>", "<r^2>"] + (["delta"] if args.verify else [])
    print("  ".join(f"{c:>12s}" for c in cols))
    for row in rows:
        cells = [f"{row['n']:>12d}", f"{row['energy']:>12.5f}",
                 f"{row['r_mean']:>12.5f}", f"{row['r2_mean']:>12.5f}"]
        if args.verify:
            cells.append(f"{row['delta_numerov']:>12.2e}")
        print("  ".join(cells))
    return 0


def cmd_rules(args) -> int:
    if args.l_max is None and args.alpha is None:
        print("error: rules needs --l-max and/or --alpha", file=sys.stderr)
        return 2
    rows: list[tuple[int, str, int]] = []
    if args.alpha is not None:
        alpha = make_alpha(*args.alpha)
        l_max = args.l_max if args.l_max is not None else 10
        k_max = l_max // alpha.p
        for l, l_alpha in selection.allowed_pairs(alpha, k_max):
            rows.append((l, str(alpha), l_alpha))
    else:
        for l in range(args.l_max + 1):
            q_max = args.q_max if args.q_max is not None else max(2 * l, 1)
            for alpha in selection.alphas_for_l(l, q_max):
                if alpha is selection.ALL_ALPHAS:
                    rows.append((l, "all", 0))
                else:
                    rows.append((l, str(alpha), alpha.l_alpha_for(l)))
    print(f"{'l':>4s}  {'alpha':>8s}  {'l_alpha':>8s}")
    for l, a, la_ in rows:
        print(f"{l:>4d}  {a:>8s}  {la_:>8d}")
    return 0


def cmd_potential(args) -> int:
    try:
        spec = PotentialSpec(
            variant=args.model, l_alpha=args.l_alpha, r_s=args.r_s, kappa=args.kappa
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    lo, hi, steps = args.r_range
    if lo <= 0:
        print("error: r range must start above 0", file=sys.stderr)
        return 2
    r = np.geomspace(lo, hi, steps) if args.log_spacing else np.linspace(lo, hi, steps)
    v = spec.evaluate(r)
    print("r,V")
    for ri, vi in zip(r, v):
        print(f"{_fmt(ri)},{_fmt(vi)}")
    return 0


def cmd_exciton(args) -> int:
    path = args.materials if args.materials is not None else units.DEFAULT_MATERIALS_PATH
    materials = units.load_materials(path)
    states = tuple(s.strip() for s in args.states.split(",") if s.strip())
    if not states:
        print("error: --states must name at least one state", file=sys.stderr)
        return 2
    for label in states:
        units.parse_state_label(label)  # validate early; ValueError -> crash is a bug
    if args.sweep_kappa is not None:
        lo, hi, steps = args.sweep_kappa
        if lo < 1:
            print("error: kappa sweep must start at or above 1", file=sys.stderr)
            return 2
        kappas = np.geomspace(lo, hi, steps)
        seen = []
        print("material,kappa,state,energy_ev")
        for material in materials:
            if material.name in seen:
                continue  # one sweep per monolayer; substrates differ only by kappa
            seen.append(material.name)
            for point in units.exciton_sweep(material, kappas, states):
                print(
                    f"{point.material},{_fmt(point.kappa)},{point.state},"
                    f"{_fmt(point.energy_ev)}"
                )
        return 0
    print(f"{'material':>10s}  {'substrate':>10s}  {'kappa':>6s}  "
          f"{'state':>5s}  {'energy_eV':>10s}")
    for material in materials:
        for label in states:
            n, l = units.parse_state_label(label)
            energy = units.exciton_energy_si(units._dimensionless_level(n, l), material)
            print(
                f"{material.name:>10s}  {material.substrate:>10s}  "
                f"{material.kappa:>6.2f}  {label:>5s}  {energy:>10.5f}"
            )
    return 0


def cmd_profile(args) -> int:
    if args.n_max < 1:
        print("error: --n-max must be >= 1", file=sys.stderr)
        return 2
    alpha = make_alpha(*args.alpha)
    config = _config_from(args)
    states = solve_block(alpha, args.l, args.n_max, config)
    if args.disk is not None:
        if args.disk < 16:
            print("error: --disk resolution must be >= 16", file=sys.stderr)
            return 2
        disk = observables.disk_density(states[-1], args.disk)
        x, y, d = disk.raster()
        print("x,y,density")
        for xi, yi, di in zip(x, y, d):
            print(f"{_fmt(xi)},{_fmt(yi)},{_fmt(di)}")
        return 0
    profiles = [observables.probability_profile(s) for s in states]
    header = "r," + ",".join(f"rho_{p.quantum.n}" for p in profiles)
    print(header)
    r = profiles[0].r
    columns = [p.density for p in profiles]
    for i in range(len(r)):
        print(",".join([_fmt(r[i])] + [_fmt(c[i]) for c in columns]))
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        # downstream closed stdout early (e.g. | head); retarget the pending
        # flush at devnull so interpreter shutdown stays quiet
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 0
    except SelectionRuleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        # domain rejections from otherwise parseable values (alpha > 1, bad grid bounds, ...)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except MaterialFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5


if __name__ == "__main__":
    sys.exit(main())
