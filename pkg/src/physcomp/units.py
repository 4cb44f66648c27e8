"""Dimensioned quantities, pinned physical constants, entropy-unit conversion.

Every calculation in this package moves through :class:`Quantity`: a float
magnitude in canonical units (SI base units plus the bit for information)
paired with integer dimension exponents. Addition across different
dimensions is an error, never a silent cast.

Information is a base dimension of its own. The bit is its canonical unit;
the nat is the same dimension scaled by 1/ln 2.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass

from .errors import DimensionMismatch, FileFormatError

LN2 = math.log(2.0)

# Exponent order: mass, length, time, temperature, current, information.
_N_DIMS = 6


@dataclass(frozen=True)
class Dimension:
    """Integer exponents over the base dimensions (abelian group under *)."""

    mass: int = 0
    length: int = 0
    time: int = 0
    temperature: int = 0
    current: int = 0
    information: int = 0

    def __mul__(self, other: "Dimension") -> "Dimension":
        return Dimension(*(a + b for a, b in zip(self._tuple(), other._tuple())))

    def __truediv__(self, other: "Dimension") -> "Dimension":
        return Dimension(*(a - b for a, b in zip(self._tuple(), other._tuple())))

    def __pow__(self, n: int) -> "Dimension":
        if not isinstance(n, int):
            raise DimensionMismatch("dimension exponents must stay integers")
        return Dimension(*(a * n for a in self._tuple()))

    def _tuple(self) -> tuple[int, ...]:
        return (
            self.mass,
            self.length,
            self.time,
            self.temperature,
            self.current,
            self.information,
        )

    @property
    def dimensionless(self) -> bool:
        return all(e == 0 for e in self._tuple())


DIMENSIONLESS = Dimension()
MASS = Dimension(mass=1)
LENGTH = Dimension(length=1)
TIME = Dimension(time=1)
TEMPERATURE = Dimension(temperature=1)
CURRENT = Dimension(current=1)
INFORMATION = Dimension(information=1)

ENERGY = MASS * LENGTH**2 / TIME**2
POWER = ENERGY / TIME
VELOCITY = LENGTH / TIME
FREQUENCY = DIMENSIONLESS / TIME
ENTROPY_THERMO = ENERGY / TEMPERATURE  # J/K
CHARGE = CURRENT * TIME
VOLTAGE = ENERGY / CHARGE
CAPACITANCE = CHARGE / VOLTAGE
ACTION = ENERGY * TIME

_BASE_SYMBOLS = ("kg", "m", "s", "K", "A", "bit")

# Preferred symbols for dimensions that show up in reports.
_DIM_SYMBOLS = {
    DIMENSIONLESS._tuple(): "",
    MASS._tuple(): "kg",
    LENGTH._tuple(): "m",
    TIME._tuple(): "s",
    TEMPERATURE._tuple(): "K",
    CURRENT._tuple(): "A",
    INFORMATION._tuple(): "bit",
    ENERGY._tuple(): "J",
    POWER._tuple(): "W",
    (MASS * LENGTH / TIME**2)._tuple(): "N",
    VELOCITY._tuple(): "m/s",
    FREQUENCY._tuple(): "1/s",
    ENTROPY_THERMO._tuple(): "J/K",
    VOLTAGE._tuple(): "V",
    CAPACITANCE._tuple(): "F",
    ACTION._tuple(): "J·s",
    (INFORMATION / TIME)._tuple(): "bit/s",
}


def _compose_symbol(dim: Dimension) -> str:
    sym = _DIM_SYMBOLS.get(dim._tuple())
    if sym is not None:
        return sym
    parts = []
    for base, e in zip(_BASE_SYMBOLS, dim._tuple()):
        if e == 1:
            parts.append(base)
        elif e != 0:
            parts.append(f"{base}^{e}")
    return "·".join(parts)


@dataclass(frozen=True, eq=False)
class Quantity:
    """A finite magnitude in canonical units plus its dimension.

    ``unit`` is a display label only; the magnitude is always stored in
    canonical units (SI base units, bit for information). Use
    :meth:`value_in` to read the number in some other unit.
    """

    magnitude: float
    dim: Dimension = DIMENSIONLESS
    unit: str = ""

    def __post_init__(self):
        if not math.isfinite(self.magnitude):
            raise DimensionMismatch(
                f"quantity magnitude must be finite, got {self.magnitude!r}"
            )
        if not self.unit:
            object.__setattr__(self, "unit", _compose_symbol(self.dim))

    # -- arithmetic -------------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, Quantity):
            return Quantity(self.magnitude * other.magnitude, self.dim * other.dim)
        return Quantity(self.magnitude * other, self.dim, self.unit)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Quantity):
            return Quantity(self.magnitude / other.magnitude, self.dim / other.dim)
        return Quantity(self.magnitude / other, self.dim, self.unit)

    def __rtruediv__(self, other):
        if isinstance(other, Quantity):  # pragma: no cover - symmetric path
            return other / self
        return Quantity(other / self.magnitude, DIMENSIONLESS / self.dim)

    def __add__(self, other: "Quantity") -> "Quantity":
        self._require_same_dim(other, "add")
        return Quantity(self.magnitude + other.magnitude, self.dim, self.unit)

    def __sub__(self, other: "Quantity") -> "Quantity":
        self._require_same_dim(other, "subtract")
        return Quantity(self.magnitude - other.magnitude, self.dim, self.unit)

    def __neg__(self) -> "Quantity":
        return Quantity(-self.magnitude, self.dim, self.unit)

    def __abs__(self) -> "Quantity":
        return Quantity(abs(self.magnitude), self.dim, self.unit)

    def __pow__(self, n: int) -> "Quantity":
        return Quantity(self.magnitude**n, self.dim**n)

    def _require_same_dim(self, other, verb: str):
        if not isinstance(other, Quantity) or other.dim != self.dim:
            raise DimensionMismatch(
                f"cannot {verb} [{self.unit or '1'}] and "
                f"[{getattr(other, 'unit', type(other).__name__) or '1'}]"
            )

    # -- comparisons (same dimension only; display unit ignored) -----------

    def __eq__(self, other):
        if not isinstance(other, Quantity):
            return NotImplemented
        return self.dim == other.dim and self.magnitude == other.magnitude

    def __hash__(self):
        return hash((self.magnitude, self.dim))

    def __lt__(self, other):
        self._require_same_dim(other, "compare")
        return self.magnitude < other.magnitude

    def __le__(self, other):
        self._require_same_dim(other, "compare")
        return self.magnitude <= other.magnitude

    def __gt__(self, other):
        self._require_same_dim(other, "compare")
        return self.magnitude > other.magnitude

    def __ge__(self, other):
        self._require_same_dim(other, "compare")
        return self.magnitude >= other.magnitude

    # -- accessors ---------------------------------------------------------

    def value_in(self, unit: "Quantity | str") -> float:
        """Magnitude of this quantity expressed in ``unit``."""
        if isinstance(unit, str):
            unit = UNITS[unit]
        self._require_same_dim(unit, "express")
        return self.magnitude / unit.magnitude

    @property
    def expressed(self) -> float:
        """Magnitude in this quantity's display unit."""
        if self.unit in UNITS:
            return self.value_in(UNITS[self.unit])
        return self.magnitude

    def with_unit(self, unit: str) -> "Quantity":
        return Quantity(self.magnitude, self.dim, unit)

    def __str__(self):
        return f"{self.expressed:g} {self.unit}".rstrip()


def quantity_mul(a: Quantity, b: Quantity) -> Quantity:
    return a * b


def quantity_div(a: Quantity, b: Quantity) -> Quantity:
    return a / b


def quantity_add(a: Quantity, b: Quantity) -> Quantity:
    return a + b


# -- unit constants (canonical magnitudes) --------------------------------

KILOGRAM = Quantity(1.0, MASS)
METER = Quantity(1.0, LENGTH)
SECOND = Quantity(1.0, TIME)
KELVIN = Quantity(1.0, TEMPERATURE)
AMPERE = Quantity(1.0, CURRENT)
BIT = Quantity(1.0, INFORMATION)
NAT = Quantity(1.0 / LN2, INFORMATION, "nat")
JOULE = Quantity(1.0, ENERGY)
WATT = Quantity(1.0, POWER)
NEWTON = Quantity(1.0, MASS * LENGTH / TIME**2)
VOLT = Quantity(1.0, VOLTAGE)
FARAD = Quantity(1.0, CAPACITANCE)
ELECTRON_VOLT = Quantity(1.602176634e-19, ENERGY, "eV")

UNITS: dict[str, Quantity] = {
    "kg": KILOGRAM,
    "m": METER,
    "s": SECOND,
    "K": KELVIN,
    "A": AMPERE,
    "bit": BIT,
    "nat": NAT,
    "J": JOULE,
    "W": WATT,
    "N": NEWTON,
    "V": VOLT,
    "F": FARAD,
    "eV": ELECTRON_VOLT,
    "J/K": Quantity(1.0, ENTROPY_THERMO),
    "J·s": Quantity(1.0, ACTION),
    "m/s": Quantity(1.0, VELOCITY),
    "1/s": Quantity(1.0, FREQUENCY),
    "bit/s": Quantity(1.0, INFORMATION / TIME),
}


def entropy_convert(s: Quantity, target_unit: str) -> Quantity:
    """Convert an entropy between bits, nats, and thermodynamic J/K.

    Accepts a quantity carrying either the information dimension or J/K.
    bits = nats / ln 2; J/K = nats * k_B.
    """
    if s.dim == INFORMATION:
        nats = s.magnitude * LN2  # canonical information unit is the bit
    elif s.dim == ENTROPY_THERMO:
        nats = s.magnitude / _PINNED["k_B"]
    else:
        raise DimensionMismatch(
            f"entropy_convert needs information or J/K, got [{s.unit or '1'}]"
        )
    if target_unit == "bits":
        return Quantity(nats / LN2, INFORMATION, "bit")
    if target_unit == "nats":
        return Quantity(nats / LN2, INFORMATION, "nat")
    if target_unit == "joules_per_kelvin":
        return Quantity(nats * _PINNED["k_B"], ENTROPY_THERMO, "J/K")
    raise DimensionMismatch(f"unknown entropy unit {target_unit!r}")


# -- physical constants ----------------------------------------------------

# CODATA 2018. c, k_B and the electron volt are exact by definition.
_PINNED = {
    "hbar": 1.054571817e-34,  # J·s
    "c": 299792458.0,  # m/s
    "G": 6.67430e-11,  # m^3 kg^-1 s^-2
    "k_B": 1.380649e-23,  # J/K
    "solar_mass": 1.98892e30,  # kg
    "electron_volt": 1.602176634e-19,  # J
    "seconds_per_year": 3.15576e7,  # Julian year
}
_DERIVED_KEYS = ("planck_mass", "planck_length")

ENV_CONSTANTS_OVERRIDE = "PHYSCOMP_CONSTANTS"


@dataclass(frozen=True)
class Constants:
    """The pinned constant set as dimensioned quantities."""

    hbar: Quantity
    c: Quantity
    G: Quantity
    k_B: Quantity
    planck_mass: Quantity
    planck_length: Quantity
    solar_mass: Quantity
    electron_volt: Quantity
    seconds_per_year: Quantity

    def self_check(self, rel_tol: float = 1e-10) -> None:
        """Verify the Planck-scale identities; raises on violation."""
        mp2 = self.hbar.magnitude * self.c.magnitude / self.G.magnitude
        lp2 = self.hbar.magnitude * self.G.magnitude / self.c.magnitude**3
        if abs(self.planck_mass.magnitude**2 / mp2 - 1.0) > rel_tol:
            raise DimensionMismatch("constants inconsistent: m_P^2 != hbar c / G")
        if abs(self.planck_length.magnitude**2 / lp2 - 1.0) > rel_tol:
            raise DimensionMismatch("constants inconsistent: l_P^2 != hbar G / c^3")


def _load_overrides(path: str) -> dict[str, float]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise FileFormatError(f"{path}: cannot read constants override: {exc}")
    if not isinstance(raw, dict):
        raise FileFormatError(f"{path}: constants override must be a flat object")
    known = set(_PINNED) | set(_DERIVED_KEYS)
    out = {}
    for key, val in raw.items():
        if key not in known:
            raise FileFormatError(f"{path}: unknown constant {key!r}")
        if not isinstance(val, (int, float)) or not math.isfinite(val):
            raise FileFormatError(f"{path}: {key}: expected a finite number")
        out[key] = float(val)
    return out


def constants(override_path: str | None = None) -> Constants:
    """Return the pinned constants, optionally patched from a config file.

    The override file is a flat JSON object, key = constant name, value =
    number in SI units. Missing keys fall back to the pinned defaults;
    Planck mass/length are rederived from (possibly overridden) hbar, c, G
    unless explicitly overridden themselves.
    """
    values = dict(_PINNED)
    overrides: dict[str, float] = {}
    if override_path is None:
        override_path = os.environ.get(ENV_CONSTANTS_OVERRIDE) or None
    if override_path:
        overrides = _load_overrides(override_path)
        for key in _PINNED:
            if key in overrides:
                values[key] = overrides[key]
    m_p = overrides.get(
        "planck_mass", math.sqrt(values["hbar"] * values["c"] / values["G"])
    )
    l_p = overrides.get(
        "planck_length", math.sqrt(values["hbar"] * values["G"] / values["c"] ** 3)
    )
    consts = Constants(
        hbar=Quantity(values["hbar"], ACTION, "J·s"),
        c=Quantity(values["c"], VELOCITY, "m/s"),
        G=Quantity(values["G"], LENGTH**3 / (MASS * TIME**2)),
        k_B=Quantity(values["k_B"], ENTROPY_THERMO, "J/K"),
        planck_mass=Quantity(m_p, MASS, "kg"),
        planck_length=Quantity(l_p, LENGTH, "m"),
        solar_mass=Quantity(values["solar_mass"], MASS, "kg"),
        electron_volt=Quantity(values["electron_volt"], ENERGY, "J"),
        seconds_per_year=Quantity(values["seconds_per_year"], TIME, "s"),
    )
    consts.self_check()
    return consts


CONSTANTS = constants()
