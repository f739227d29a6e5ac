"""SI conversion layer: physical constants, material data, energy mappings.

The solver works in a dimensionless gauge. This module owns every constant
and formula needed to turn those numbers into electron-volts, for two
systems: the planar hydrogen-like atom (log potential from 2D Gauss' law)
and the 2D exciton in the screened-interaction logarithmic regime.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Sequence

from .core import MaterialFileError

EULER_GAMMA = 0.5772156649015329


@dataclass(frozen=True)
class PhysicalConstants:
    """CODATA 2018 values, SI base units. One authoritative instance below."""

    hbar: float = 1.054571817e-34          # J s (exact within CODATA 2018)
    e: float = 1.602176634e-19             # C (exact)
    eps0: float = 8.8541878128e-12         # F/m
    m_e: float = 9.1093837015e-31          # kg
    m_p: float = 1.67262192369e-27         # kg
    euler_gamma: float = EULER_GAMMA

    @property
    def reduced_hydrogen_mass(self) -> float:
        return self.m_e * self.m_p / (self.m_e + self.m_p)


CONSTANTS = PhysicalConstants()

# e^2/(4 pi eps0) expressed in eV nm: the prefactor every SI energy formula
# in this package shares.
COULOMB_EV_NM = CONSTANTS.e / (4.0 * math.pi * CONSTANTS.eps0) * 1e9

# 4 pi eps0 hbar^2 / (m_e e^2) in nm.
BOHR_RADIUS_NM = (
    4.0 * math.pi * CONSTANTS.eps0 * CONSTANTS.hbar**2
    / (CONSTANTS.m_e * CONSTANTS.e**2)
    * 1e9
)


@dataclass(frozen=True)
class MaterialParams:
    """One monolayer material on one substrate.

    mu is the exciton reduced mass in units of the electron mass, r_s_nm the
    screening length in nanometers at this kappa. The product kappa * r_s_nm
    is a substrate-independent property of the monolayer itself.
    """

    name: str
    substrate: str
    mu: float
    r_s_nm: float
    kappa: float

    def __post_init__(self):
        if self.mu <= 0:
            raise ValueError(f"{self.name}: mu must be positive, got {self.mu}")
        if self.r_s_nm <= 0:
            raise ValueError(f"{self.name}: r_s_nm must be positive, got {self.r_s_nm}")
        if self.kappa < 1:
            raise ValueError(f"{self.name}: kappa must be >= 1, got {self.kappa}")


DEFAULT_MATERIALS_PATH = Path(__file__).parent / "data" / "materials.json"

_ENTRY_FIELDS = {
    "name": str,
    "substrate": str,
    "mu_over_me": (int, float),
    "r_s_nm": (int, float),
    "kappa": (int, float),
}


def _array_object_lines(text: str) -> list[int]:
    """1-based line numbers of the objects directly inside the top JSON array.

    Works for both accepted layouts (bare array, or wrapper object holding a
    "materials" array): an entry is any '{' opened while the innermost open
    bracket is '[' at nesting depth <= 2.
    """
    lines: list[int] = []
    stack: list[str] = []
    line = 1
    in_string = False
    escape = False
    for ch in text:
        if ch == "\n":
            line += 1
        if in_string:
            if escape:
                escape = False
            elif ch == "\\":
                escape = True
            elif ch == '"':
                in_string = False
            continue
        if ch == '"':
            in_string = True
        elif ch in "[{":
            if ch == "{" and stack and stack[-1] == "[" and len(stack) <= 2:
                lines.append(line)
            stack.append(ch)
        elif ch in "]}":
            if stack:
                stack.pop()
    return lines


def load_materials(path: str | Path = DEFAULT_MATERIALS_PATH) -> list[MaterialParams]:
    """Read and validate a material-parameter file.

    Accepts either a bare JSON array of entries or a wrapper object
    {"schema_version": 1, "notes": ..., "materials": [...]}. Every entry must
    carry exactly the keys name, substrate, mu_over_me, r_s_nm, kappa. Any
    violation raises MaterialFileError naming the entry and its line.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise MaterialFileError(f"{path}: cannot read: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MaterialFileError(
            f"{path.name}: invalid JSON at line {exc.lineno}: {exc.msg}"
        ) from exc

    if isinstance(doc, dict):
        unknown = set(doc) - {"schema_version", "notes", "materials"}
        if unknown:
            raise MaterialFileError(
                f"{path.name}: unknown top-level keys {sorted(unknown)} "
                "(allowed: schema_version, notes, materials)"
            )
        if doc.get("schema_version", 1) != 1:
            raise MaterialFileError(
                f"{path.name}: unsupported schema_version {doc['schema_version']!r}"
            )
        if "materials" not in doc:
            raise MaterialFileError(f"{path.name}: missing 'materials' array")
        entries = doc["materials"]
    elif isinstance(doc, list):
        entries = doc
    else:
        raise MaterialFileError(
            f"{path.name}: top level must be an array or a wrapper object, "
            f"got {type(doc).__name__}"
        )
    if not isinstance(entries, list):
        raise MaterialFileError(f"{path.name}: 'materials' must be an array")

    entry_lines = _array_object_lines(text)

    def describe(i: int) -> str:
        if i < len(entry_lines):
            return f"entry {i + 1} (line {entry_lines[i]})"
        return f"entry {i + 1}"

    materials: list[MaterialParams] = []
    for i, obj in enumerate(entries):
        if not isinstance(obj, dict):
            raise MaterialFileError(
                f"{path.name}: {describe(i)}: expected an object, got {type(obj).__name__}"
            )
        missing = [k for k in _ENTRY_FIELDS if k not in obj]
        if missing:
            raise MaterialFileError(
                f"{path.name}: {describe(i)}: missing required field(s) {missing}"
            )
        extra = [k for k in obj if k not in _ENTRY_FIELDS]
        if extra:
            raise MaterialFileError(
                f"{path.name}: {describe(i)}: unknown field(s) {extra}"
            )
        for key, types in _ENTRY_FIELDS.items():
            if not isinstance(obj[key], types) or isinstance(obj[key], bool):
                raise MaterialFileError(
                    f"{path.name}: {describe(i)}: field '{key}' must be "
                    f"{types.__name__ if isinstance(types, type) else 'a number'}, "
                    f"got {obj[key]!r}"
                )
        try:
            materials.append(
                MaterialParams(
                    name=obj["name"],
                    substrate=obj["substrate"],
                    mu=float(obj["mu_over_me"]),
                    r_s_nm=float(obj["r_s_nm"]),
                    kappa=float(obj["kappa"]),
                )
            )
        except ValueError as exc:
            raise MaterialFileError(f"{path.name}: {describe(i)}: {exc}") from exc
    return materials


def hydrogen_energy_si(e_dimensionless: float, r0: float) -> float:
    """Map a dimensionless atom level to the 2D-electrostatics energy scale.

    Implements (e^2/(2 pi eps0)) * [E + (1/2) ln(2 pi eps0 hbar^2/(2 m e^2 r0^2))]
    with m the reduced electron-proton mass and r0 (meters) the free gauge
    length of the log potential. The prefactor is read in the 2D convention
    where eps0 numerically keeps its CODATA value but carries the 2D
    permittivity's units, making the bracket's argument dimensionless; no
    published reference value exists to pin that convention, so the
    physically meaningful outputs are the r0-independent level differences
    and the pure gauge shift -(e^2/(2 pi eps0)) ln(b) under r0 -> b*r0.
    """
    if r0 <= 0:
        raise ValueError(f"r0 must be positive, got {r0}")
    c = CONSTANTS
    prefactor = c.e**2 / (2.0 * math.pi * c.eps0)
    m = c.reduced_hydrogen_mass
    log_arg = 2.0 * math.pi * c.eps0 * c.hbar**2 / (2.0 * m * c.e**2 * r0**2)
    return prefactor * (e_dimensionless + 0.5 * math.log(log_arg))


def hydrogen_log_length() -> float:
    """The r0 (meters, same reading as hydrogen_energy_si) that zeroes the log term."""
    c = CONSTANTS
    m = c.reduced_hydrogen_mass
    return math.sqrt(2.0 * math.pi * c.eps0 * c.hbar**2 / (2.0 * m * c.e**2))


def dimensionless_length_scale(material: MaterialParams) -> float:
    """Length (nm) that one dimensionless radius unit represents for a material.

    sqrt(4 pi eps0 kappa r_s hbar^2 / (2 mu e^2)), reduced to Bohr-radius form.
    """
    return math.sqrt(
        0.5 * material.kappa * material.r_s_nm * BOHR_RADIUS_NM / material.mu
    )


def exciton_energy_si(e_dimensionless: float, material: MaterialParams) -> float:
    """Exciton level in eV from its dimensionless eigenvalue.

    (e^2/(4 pi eps0 kappa r_s)) * [(E + gamma) + (1/2) ln(4 pi eps0 kappa
    hbar^2 / (8 mu e^2 r_s))]. Negative for bound states in the regime where
    the logarithmic short-range form of the screened interaction holds.
    """
    pref = COULOMB_EV_NM / (material.kappa * material.r_s_nm)
    log_arg = material.kappa * BOHR_RADIUS_NM / (8.0 * material.mu * material.r_s_nm)
    return pref * ((e_dimensionless + EULER_GAMMA) + 0.5 * math.log(log_arg))


@lru_cache(maxsize=None)
def _dimensionless_level(n: int, l: int) -> float:
    # The exciton problem lives on the plane (no deficit), so l_alpha = l and
    # the eigenvalue depends only on (n, l); cache across sweep points.
    from . import fdm_solver
    from .core import default_config, make_alpha

    state = fdm_solver.solve_state(make_alpha(1, 1), l, n, default_config())
    return state.energy


@dataclass(frozen=True)
class SweepPoint:
    material: str
    kappa: float
    state: str
    n: int
    l: int
    energy_ev: float


STATE_LETTERS = {"s": 0, "p": 1, "d": 2, "f": 3}


def parse_state_label(label: str) -> tuple[int, int]:
    """'2s' -> (n=2, l=0). Letters follow the usual s, p, d, f order."""
    label = label.strip().lower()
    if len(label) < 2 or label[-1] not in STATE_LETTERS:
        raise ValueError(
            f"state label {label!r} not understood; use forms like 1s, 2s, 3d"
        )
    try:
        n = int(label[:-1])
    except ValueError as exc:
        raise ValueError(f"state label {label!r} has a non-integer level") from exc
    if n < 1:
        raise ValueError(f"state label {label!r}: level must be >= 1")
    return n, STATE_LETTERS[label[-1]]


def exciton_sweep(
    material: MaterialParams,
    kappa_values: Iterable[float],
    states: Sequence[str] = ("1s",),
) -> list[SweepPoint]:
    """Exciton energies across a dielectric-environment sweep.

    The monolayer's screening is substrate-independent through the product
    s = kappa * r_s, so each sweep point rescales r_s = s/kappa while kappa
    varies. Dimensionless eigenvalues are kappa-independent and computed once
    per state.
    """
    s_nm = material.kappa * material.r_s_nm
    parsed = [(label, *parse_state_label(label)) for label in states]
    points: list[SweepPoint] = []
    for kappa in kappa_values:
        if kappa < 1:
            raise ValueError(f"kappa must be >= 1, got {kappa}")
        at_kappa = replace(material, kappa=kappa, r_s_nm=s_nm / kappa)
        for label, n, l in parsed:
            points.append(
                SweepPoint(
                    material=material.name,
                    kappa=kappa,
                    state=label,
                    n=n,
                    l=l,
                    energy_ev=exciton_energy_si(_dimensionless_level(n, l), at_kappa),
                )
            )
    return points
