"""The physical complexity measures and their error-correction accounting.

Temporal complexity counts the bit flips energy E can drive in time t,
2Et/(pi hbar). Spatial complexity is negentropy, S_max - S, in bits. Free
complexity is the free energy a computation consumes, convertible to an
op count through the same energy-time bound. Error correction at rate eps
per op consumes h(eps) fresh bits per op, which ties space to time.

User-facing entropies are in bits throughout; internal math is in nats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import (
    EntropyOutOfRange,
    NegativeInput,
    NonPositiveEnergy,
    NonPositiveTemperature,
    ProbabilityOutOfRange,
)
from .units import (
    CONSTANTS,
    ENERGY,
    INFORMATION,
    LN2,
    TEMPERATURE,
    TIME,
    DimensionMismatch,
    Quantity,
)

_HBAR = CONSTANTS.hbar.magnitude
_K_B = CONSTANTS.k_B.magnitude


def _require(q: Quantity, dim, what: str) -> float:
    if not isinstance(q, Quantity) or q.dim != dim:
        raise DimensionMismatch(f"{what}: wrong dimension")
    return q.magnitude


def phi_time(E: Quantity, t: Quantity) -> float:
    """Temporal complexity 2Et/(pi hbar): the op-count budget of E over t."""
    e = _require(E, ENERGY, "energy")
    dt = _require(t, TIME, "time")
    if e < 0.0 or dt < 0.0:
        raise NegativeInput("phi_time needs E >= 0 and t >= 0")
    return 2.0 * e * dt / (math.pi * _HBAR)


def ml_min_time(E: Quantity) -> Quantity:
    """Minimum time pi hbar / (2E) for one orthogonal state change."""
    e = _require(E, ENERGY, "energy")
    if e <= 0.0:
        raise NonPositiveEnergy("minimum flip time needs E > 0")
    return Quantity(math.pi * _HBAR / (2.0 * e), TIME, "s")


def phi_space(s_max: Quantity, s: Quantity) -> Quantity:
    """Negentropy S_max - S: the bits of memory a system can supply."""
    hi = _require(s_max, INFORMATION, "maximum entropy")
    lo = _require(s, INFORMATION, "entropy")
    if not (0.0 <= lo <= hi):
        raise EntropyOutOfRange(f"need 0 <= S <= S_max, got S={lo!r}, S_max={hi!r}")
    return Quantity(hi - lo, INFORMATION, "bit")


def landauer_cost(T: Quantity, n_bits: float) -> Quantity:
    """Free energy n k_B T ln 2 dissipated by erasing n bits at temperature T."""
    t = _require(T, TEMPERATURE, "temperature")
    if t <= 0.0:
        raise NonPositiveTemperature("Landauer cost needs T > 0")
    if n_bits < 0:
        raise NegativeInput("bit count must be >= 0")
    return Quantity(n_bits * _K_B * t * LN2, ENERGY, "J")


def binary_entropy(eps: float) -> Quantity:
    """h(eps) = -eps log2 eps - (1-eps) log2 (1-eps), in bits."""
    if not (0.0 <= eps <= 1.0):
        raise ProbabilityOutOfRange(f"probability must be in [0, 1], got {eps!r}")
    h = 0.0
    for p in (eps, 1.0 - eps):
        if p > 0.0:
            h -= p * math.log2(p)
    return Quantity(h, INFORMATION, "bit")


def error_correction_space(t_ops: float, eps: float, mode: str = "exact") -> Quantity:
    """Fresh ancilla bits consumed correcting ``t_ops`` steps at error rate eps.

    Exact mode charges the full injected entropy h(eps) per op; asymptotic
    mode charges the leading term eps log2(1/eps). Exact >= asymptotic on
    (0, 1/2).
    """
    if t_ops < 0:
        raise NegativeInput("op count must be >= 0")
    if not (0.0 <= eps <= 0.5):
        raise ProbabilityOutOfRange(f"error rate must be in [0, 1/2], got {eps!r}")
    if mode == "exact":
        per_op = binary_entropy(eps).magnitude
    elif mode == "asymptotic":
        per_op = eps * math.log2(1.0 / eps) if eps > 0.0 else 0.0
    else:
        raise ProbabilityOutOfRange(f"unknown mode {mode!r}")
    return Quantity(t_ops * per_op, INFORMATION, "bit")


def free_phi(delta_F: Quantity) -> Quantity:
    """Free complexity: the free energy consumed, identity in joules."""
    df = _require(delta_F, ENERGY, "free energy")
    if df < 0.0:
        raise NegativeInput("consumed free energy must be >= 0")
    return Quantity(df, ENERGY, "J")


def free_phi_op_equivalent(delta_F: Quantity, t: Quantity) -> float:
    """Op count 2 F t / (pi hbar) the consumed free energy could have driven."""
    return phi_time(free_phi(delta_F), t)


def free_phi_thermo(T: Quantity, s_eq: Quantity, s: Quantity) -> Quantity:
    """Free complexity as temperature times thermodynamic depth, in joules.

    Equals the Landauer cost of the depth: k_B T (S_eq - S) ln 2 with the
    entropies in bits.
    """
    t = _require(T, TEMPERATURE, "temperature")
    if t <= 0.0:
        raise NonPositiveTemperature("free_phi_thermo needs T > 0")
    depth = phi_space(s_eq, s)
    return Quantity(depth.magnitude * _K_B * t * LN2, ENERGY, "J")


@dataclass(frozen=True)
class ComplexityReport:
    """The three measures plus Landauer accounting for one described system."""

    phi_time_ops: float
    phi_space_bits: Quantity
    free_phi: Quantity
    landauer_cost: Quantity
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        if (
            self.phi_time_ops < 0.0
            or self.phi_space_bits.magnitude < 0.0
            or self.free_phi.magnitude < 0.0
            or self.landauer_cost.magnitude < 0.0
        ):
            raise NegativeInput("complexity measures are counts; all must be >= 0")


def complexity_report(
    E: Quantity,
    t: Quantity,
    s_max: Quantity,
    s: Quantity,
    T: Quantity,
    label: str = "",
) -> ComplexityReport:
    """Bundle the measures for a system of energy E running for time t."""
    depth = phi_space(s_max, s)
    return ComplexityReport(
        phi_time_ops=phi_time(E, t),
        phi_space_bits=depth,
        free_phi=free_phi_thermo(T, s_max, s),
        landauer_cost=landauer_cost(T, depth.magnitude),
        metadata={
            "label": label,
            "energy_joules": E.magnitude,
            "duration_seconds": t.magnitude,
            "temperature_kelvin": T.magnitude,
        },
    )
