"""Reference computing systems and how far each sits from the Landauer limit.

The built-in entries are deliberately order-of-magnitude figures: a 5 nm
transistor burns about 1e-16 J per irreversible op, a covalent-bond bio-op
costs about one electron volt, and a resting human runs roughly 100 W of
molecular information processing. Comparisons against k_B T ln 2 quantify
the gap to the thermodynamic floor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NonPositiveCapacitance, NonPositiveEnergy, NonPositiveTemperature
from .units import (
    CAPACITANCE,
    CONSTANTS,
    ENERGY,
    FREQUENCY,
    LN2,
    POWER,
    TEMPERATURE,
    VOLTAGE,
    DimensionMismatch,
    Quantity,
)

_K_B = CONSTANTS.k_B.magnitude

COVALENT_BOND_J = 1.6e-19  # ~ one electron volt
ROOM_TEMPERATURE_K = 300.0


@dataclass(frozen=True)
class ReferenceSystem:
    """A named computing system with its per-op energy scale."""

    name: str
    energy_per_op: Quantity  # J
    power: Quantity | None = None  # W
    operating_temperature: Quantity | None = None  # K
    op_rate: Quantity | None = None  # 1/s, for entries quoted as a rate
    notes: str = ""
    provenance: str = ""

    def __post_init__(self):
        if self.energy_per_op.dim != ENERGY or self.energy_per_op.magnitude <= 0.0:
            raise NonPositiveEnergy(f"{self.name}: energy per op must be positive")


def builtin_systems() -> tuple[ReferenceSystem, ...]:
    """The built-in reference systems, each tagged with where its number is from."""
    landauer_300 = _K_B * ROOM_TEMPERATURE_K * LN2
    return (
        ReferenceSystem(
            name="5nm-transistor",
            energy_per_op=Quantity(1e-16, ENERGY, "J"),
            operating_temperature=Quantity(ROOM_TEMPERATURE_K, TEMPERATURE, "K"),
            notes="~0.1 fF switched capacitance; irreversible logic",
            provenance="dissipation per irreversible logical operation",
        ),
        ReferenceSystem(
            name="covalent-bio-op",
            energy_per_op=Quantity(COVALENT_BOND_J, ENERGY, "J"),
            notes="forming/breaking one covalent bond, ~1 eV",
            provenance="covalent bond free energy scale",
        ),
        ReferenceSystem(
            name="hydrogen-bond",
            energy_per_op=Quantity(COVALENT_BOND_J / 10.0, ENERGY, "J"),
            notes="one decade below covalent",
            provenance="hydrogen bonds, an order of magnitude lower",
        ),
        ReferenceSystem(
            name="van-der-waals",
            energy_per_op=Quantity(COVALENT_BOND_J / 100.0, ENERGY, "J"),
            notes="two decades below covalent; source says only 'lower still'",
            provenance="van der Waals bonds, lower still",
        ),
        ReferenceSystem(
            name="human-metabolism",
            energy_per_op=Quantity(COVALENT_BOND_J, ENERGY, "J"),
            power=Quantity(100.0, POWER, "W"),
            notes="~100 W on reproduction and metabolism at bio-op energies",
            provenance="individual human power budget",
        ),
        ReferenceSystem(
            name="world-compute",
            energy_per_op=Quantity(1e-16, ENERGY, "J"),
            op_rate=Quantity(1e21, FREQUENCY, "1/s"),
            notes="one zetaflop; flops counted as logical ops per the source's usage",
            provenance="all electronic computers combined",
        ),
        ReferenceSystem(
            name="landauer-300K",
            energy_per_op=Quantity(landauer_300, ENERGY, "J"),
            operating_temperature=Quantity(ROOM_TEMPERATURE_K, TEMPERATURE, "K"),
            notes="k_B T ln 2 at room temperature; the irreversibility floor",
            provenance="Landauer limit",
        ),
    )


def get_system(name: str) -> ReferenceSystem:
    for sys_ in builtin_systems():
        if sys_.name == name:
            return sys_
    known = ", ".join(s.name for s in builtin_systems())
    raise NonPositiveEnergy(f"unknown reference system {name!r}; known: {known}")


def inefficiency_factor(sys_: ReferenceSystem, T: Quantity) -> float:
    """Energy per op over k_B T ln 2: how far above the Landauer floor."""
    if T.dim != TEMPERATURE:
        raise DimensionMismatch("temperature must be in kelvin")
    if T.magnitude <= 0.0:
        raise NonPositiveTemperature("inefficiency factor needs T > 0")
    return sys_.energy_per_op.magnitude / (_K_B * T.magnitude * LN2)


def op_rate(power: Quantity, energy_per_op: Quantity) -> Quantity:
    """Operations per second sustainable at ``power`` given the per-op cost."""
    if power.dim != POWER or energy_per_op.dim != ENERGY:
        raise DimensionMismatch("op rate needs power in W and energy in J")
    if power.magnitude < 0.0:
        raise NonPositiveEnergy("power must be >= 0")
    if energy_per_op.magnitude <= 0.0:
        raise NonPositiveEnergy("energy per op must be positive")
    return Quantity(power.magnitude / energy_per_op.magnitude, FREQUENCY, "1/s")


def switch_energy(C: Quantity, V: Quantity) -> Quantity:
    """Energy (1/2) C V^2 stored in switching a capacitance C through V."""
    if C.dim != CAPACITANCE or V.dim != VOLTAGE:
        raise DimensionMismatch("switch energy needs C in farads and V in volts")
    if C.magnitude <= 0.0:
        raise NonPositiveCapacitance("capacitance must be positive")
    if not math.isfinite(V.magnitude):
        raise DimensionMismatch("voltage must be finite")
    return Quantity(0.5 * C.magnitude * V.magnitude**2, ENERGY, "J")
