"""Closed-form black hole computer model: geometry, thermodynamics, budgets.

A hole of mass M stores 4 pi (M/m_P)^2 nats behind a horizon of radius
2GM/c^2, runs at 2Mc^2/(pi hbar) ops per second, and evaporates in
5120 pi G^2 M^3 / (hbar c^4) seconds. Exactly half its rest energy is free
energy; each of its bits flips in pi^2 R / c, the same time light needs to
cross the hole, which is what makes it the ultimate serial computer.

The evaporation trajectory M(t) = M0 (1 - t/t_M)^(1/3) is the unique
solution of the constant-flux law dM/dt = -hbar c^4 / (15360 pi G^2 M^2)
with the quoted total lifetime; it is a model choice, not a quoted result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO

from .errors import NegativeInput, NonPositiveMass, TimeOutOfRange
from .measures import binary_entropy
from .units import (
    CONSTANTS,
    ENERGY,
    FREQUENCY,
    LENGTH,
    LN2,
    MASS,
    TEMPERATURE,
    TIME,
    DimensionMismatch,
    Quantity,
)

_HBAR = CONSTANTS.hbar.magnitude
_C = CONSTANTS.c.magnitude
_G = CONSTANTS.G.magnitude
_K_B = CONSTANTS.k_B.magnitude
_M_P = CONSTANTS.planck_mass.magnitude
_YEAR = CONSTANTS.seconds_per_year.magnitude

PAGE_FRACTION = 1.0 - 2.0 ** (-1.5)  # entropy-crossover time / lifetime


@dataclass(frozen=True)
class BlackHoleReport:
    """Every closed-form property of a black hole of mass M."""

    mass: Quantity  # kg
    radius: Quantity  # m
    temperature: Quantity  # K
    entropy_nats: float
    entropy_bits: float
    lifetime: Quantity  # s
    lifetime_years: float
    ops_per_second: Quantity  # 1/s
    total_ops: float
    bit_flip_time: Quantity  # s
    free_energy: Quantity  # J
    page_time_paper: Quantity  # s, half the lifetime
    page_time_entropy: Quantity  # s, radiation-entropy crossover
    max_error_rate: float


@dataclass(frozen=True)
class TimelineSample:
    """One point on the evaporation timeline."""

    t: Quantity  # s
    mass: Quantity  # kg
    hole_entropy_bits: float
    radiation_entropy_bits: float


def _mass_kg(M: Quantity) -> float:
    if not isinstance(M, Quantity) or M.dim != MASS:
        raise DimensionMismatch("black hole mass must be in kilograms")
    if M.magnitude <= 0.0:
        raise NonPositiveMass(f"mass must be positive, got {M}")
    return M.magnitude


def schwarzschild_radius(M: Quantity) -> Quantity:
    return Quantity(2.0 * _G * _mass_kg(M) / _C**2, LENGTH, "m")


def entropy_nats(M: Quantity) -> float:
    m = _mass_kg(M)
    return 4.0 * math.pi * (m / _M_P) ** 2


def hawking_temperature(M: Quantity) -> Quantity:
    m = _mass_kg(M)
    return Quantity(_M_P**2 * _C**2 / (8.0 * math.pi * m) / _K_B, TEMPERATURE, "K")


def lifetime(M: Quantity) -> Quantity:
    m = _mass_kg(M)
    return Quantity(5120.0 * math.pi * _G**2 * m**3 / (_HBAR * _C**4), TIME, "s")


def ops_per_second(M: Quantity) -> Quantity:
    m = _mass_kg(M)
    return Quantity(2.0 * m * _C**2 / (math.pi * _HBAR), FREQUENCY, "1/s")


def total_ops(M: Quantity) -> float:
    return ops_per_second(M).magnitude * lifetime(M).magnitude


def bit_flip_time(M: Quantity) -> Quantity:
    return Quantity(math.pi**2 * schwarzschild_radius(M).magnitude / _C, TIME, "s")


def free_energy(M: Quantity) -> Quantity:
    return Quantity(_mass_kg(M) * _C**2 / 2.0, ENERGY, "J")


def solve_error_rate(ops: float, capacity_bits: float) -> float:
    """The eps in (0, 1/2) with h(eps) * ops = capacity, by bisection.

    Returns 1/2 when the capacity covers the full entropy production even
    at maximal error rate (the bound is vacuous).
    """
    if ops <= 0.0 or capacity_bits <= 0.0:
        raise NegativeInput("op count and capacity must be positive")
    target = capacity_bits / ops  # bits of entropy affordable per op
    if target >= 1.0:
        return 0.5
    # bisect to float resolution: heavy holes sit at eps ~ 1e-13 and below,
    # where the nominal 1e-12 absolute tolerance would be the whole answer
    lo, hi = 0.0, 0.5
    while True:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            return mid
        if binary_entropy(mid).magnitude < target:
            lo = mid
        else:
            hi = mid


def max_error_rate(M: Quantity) -> float:
    """Largest per-op error rate whose correction entropy fits the hole.

    Solves h(eps) * total_ops = S_bits. For holes at or below the Planck
    mass the budget never binds and the vacuous 1/2 is returned.
    """
    m = _mass_kg(M)
    s_bits = entropy_nats(M) / LN2
    if m <= _M_P:
        return 0.5
    return solve_error_rate(total_ops(M), s_bits)


def characterize(M: Quantity) -> BlackHoleReport:
    """All closed-form properties of a hole of mass M."""
    s_nats = entropy_nats(M)
    t_m = lifetime(M)
    return BlackHoleReport(
        mass=M,
        radius=schwarzschild_radius(M),
        temperature=hawking_temperature(M),
        entropy_nats=s_nats,
        entropy_bits=s_nats / LN2,
        lifetime=t_m,
        lifetime_years=t_m.magnitude / _YEAR,
        ops_per_second=ops_per_second(M),
        total_ops=total_ops(M),
        bit_flip_time=bit_flip_time(M),
        free_energy=free_energy(M),
        page_time_paper=Quantity(t_m.magnitude / 2.0, TIME, "s"),
        page_time_entropy=Quantity(PAGE_FRACTION * t_m.magnitude, TIME, "s"),
        max_error_rate=max_error_rate(M),
    )


def mass_at_time(M0: Quantity, t: Quantity) -> Quantity:
    """Remaining mass M0 (1 - t/t_M)^(1/3) at time t into the evaporation."""
    m0 = _mass_kg(M0)
    if not isinstance(t, Quantity) or t.dim != TIME:
        raise DimensionMismatch("time must be in seconds")
    t_m = lifetime(M0).magnitude
    if not (0.0 <= t.magnitude <= t_m):
        raise TimeOutOfRange(
            f"time {t.magnitude!r} s outside the lifetime [0, {t_m!r}] s"
        )
    return Quantity(m0 * (1.0 - t.magnitude / t_m) ** (1.0 / 3.0), MASS, "kg")


def page_curve(M0: Quantity, n_samples: int) -> list[TimelineSample]:
    """Evaporation timeline on a uniform grid over [0, t_M].

    The radiation entropy follows the standard crossover model
    min(S(M0) - S(M(t)), S(M(t))): it rises while the hole dominates, falls
    once the hole does, and vanishes at both endpoints.
    """
    _mass_kg(M0)
    if n_samples < 2:
        raise TimeOutOfRange("need at least 2 samples")
    t_m = lifetime(M0).magnitude
    s0_bits = entropy_nats(M0) / LN2
    out = []
    for i in range(n_samples):
        # pin the endpoint: t_m * i / (n-1) can land one ulp past t_m
        t = t_m if i == n_samples - 1 else t_m * i / (n_samples - 1)
        m_t = mass_at_time(M0, Quantity(t, TIME, "s"))
        s_bits = entropy_nats(m_t) / LN2 if m_t.magnitude > 0.0 else 0.0
        out.append(
            TimelineSample(
                t=Quantity(t, TIME, "s"),
                mass=m_t,
                hole_entropy_bits=s_bits,
                radiation_entropy_bits=min(s0_bits - s_bits, s_bits),
            )
        )
    return out


TIMELINE_CSV_HEADER = "t_seconds,mass_kg,hole_entropy_bits,radiation_entropy_bits"


def timeline_csv_lines(samples: Sequence[TimelineSample]) -> Iterable[str]:
    """Render timeline samples as CSV rows at full double precision."""
    yield TIMELINE_CSV_HEADER
    for s in samples:
        yield (
            f"{s.t.magnitude:.17g},{s.mass.magnitude:.17g},"
            f"{s.hole_entropy_bits:.17g},{s.radiation_entropy_bits:.17g}"
        )


def write_timeline_csv(samples: Sequence[TimelineSample], stream: TextIO) -> None:
    for line in timeline_csv_lines(samples):
        stream.write(line)
        stream.write("\n")
