"""Bound states of the planar logarithmic atom on a cone.

Public surface: build an alpha with make_alpha, solve states with
solve_state/solve_block, read observables from the observables module, map
to SI with the units module, cross-check anything with the shooting oracle.
"""
from .core import (
    ConvergenceError,
    LogatomError,
    MaterialFileError,
    QuantumNumbers,
    RadialGrid,
    RationalAlpha,
    SelectionRuleError,
    SolverConfig,
    default_config,
    default_grid,
    make_alpha,
    richardson,
)
from .fdm_solver import (
    EigenState,
    TridiagonalOperator,
    count_radial_nodes,
    discretize,
    eigenvector,
    lowest_eigenvalues,
    solve_block,
    solve_state,
)
from .observables import (
    DiskDensity,
    ProbabilityProfile,
    disk_density,
    expectation_r_power,
    peak_radius,
    probability_profile,
    ring_count,
    tail_fraction,
    virial_residual,
)
from .potentials import (
    PotentialSpec,
    bessel_j0,
    bessel_y0,
    coulomb3d,
    effective_potential,
    effective_potential_minimum,
    log2d,
    rk_full,
    rk_log_approx,
    struve_h0,
    struve_h0_minus_y0,
)
from .selection import ALL_ALPHAS, allowed_pairs, alphas_for_l, complement_pairs
from .shooting_oracle import NumerovResult, numerov_integrate, shoot_eigenvalue
from .units import (
    BOHR_RADIUS_NM,
    CONSTANTS,
    COULOMB_EV_NM,
    EULER_GAMMA,
    MaterialParams,
    PhysicalConstants,
    SweepPoint,
    dimensionless_length_scale,
    exciton_energy_si,
    exciton_sweep,
    hydrogen_energy_si,
    hydrogen_log_length,
    load_materials,
    parse_state_label,
)

__version__ = "1.0.0"

__all__ = [
    "ALL_ALPHAS",
    "BOHR_RADIUS_NM",
    "CONSTANTS",
    "COULOMB_EV_NM",
    "ConvergenceError",
    "DiskDensity",
    "EULER_GAMMA",
    "EigenState",
    "LogatomError",
    "MaterialFileError",
    "MaterialParams",
    "NumerovResult",
    "PhysicalConstants",
    "PotentialSpec",
    "ProbabilityProfile",
    "QuantumNumbers",
    "RadialGrid",
    "RationalAlpha",
    "SelectionRuleError",
    "SolverConfig",
    "SweepPoint",
    "TridiagonalOperator",
    "allowed_pairs",
    "alphas_for_l",
    "bessel_j0",
    "bessel_y0",
    "complement_pairs",
    "coulomb3d",
    "count_radial_nodes",
    "default_config",
    "default_grid",
    "dimensionless_length_scale",
    "discretize",
    "disk_density",
    "effective_potential",
    "effective_potential_minimum",
    "eigenvector",
    "exciton_energy_si",
    "exciton_sweep",
    "expectation_r_power",
    "hydrogen_energy_si",
    "hydrogen_log_length",
    "load_materials",
    "log2d",
    "lowest_eigenvalues",
    "make_alpha",
    "numerov_integrate",
    "parse_state_label",
    "peak_radius",
    "probability_profile",
    "richardson",
    "ring_count",
    "rk_full",
    "rk_log_approx",
    "shoot_eigenvalue",
    "solve_block",
    "solve_state",
    "struve_h0",
    "struve_h0_minus_y0",
    "tail_fraction",
    "virial_residual",
]
