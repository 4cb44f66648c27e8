"""Entropies, Gibbs states, free energy, and extractable work.

All routines work through the spectral decomposition of the Hamiltonian;
exponentials are shifted by the dominant eigenvalue so the Boltzmann
weights never overflow (the reported partition function still can, for
pathological scales, and then raises).
"""

from __future__ import annotations

import math

import numpy as np

from ..errors import (
    EnergyOutOfRange,
    EntropyOutOfRange,
    InfiniteTemperature,
    NonConvergence,
    NonPositiveTemperature,
    NumericalOverflow,
    ZeroTemperature,
)
from ..units import (
    CONSTANTS,
    ENERGY,
    INFORMATION,
    LN2,
    TEMPERATURE,
    DimensionMismatch,
    Dimension,
    Quantity,
)
from .states import DensityMatrix, GibbsState, HermitianOperator

_K_B = CONSTANTS.k_B.magnitude
_INV_ENERGY = Dimension() / ENERGY

ENERGY_MATCH_RTOL = 1e-10  # relative to the spectral range
BETA_ZERO_RTOL = 1e-12


def _require(q: Quantity, dim, what: str) -> float:
    if not isinstance(q, Quantity) or q.dim != dim:
        raise DimensionMismatch(f"{what}: wrong dimension")
    return q.magnitude


def von_neumann_entropy(rho: DensityMatrix, unit: str = "bits") -> Quantity:
    """S = -sum(p ln p) over the state's spectrum, with 0 ln 0 = 0."""
    p = rho.probabilities
    nz = p[p > 0.0]
    s_nats = float(-(nz * np.log(nz)).sum())
    s_nats = min(max(s_nats, 0.0), math.log(rho.dim))
    if unit == "bits":
        return Quantity(s_nats / LN2, INFORMATION, "bit")
    if unit == "nats":
        return Quantity(s_nats / LN2, INFORMATION, "nat")
    raise DimensionMismatch(f"unknown entropy unit {unit!r}")


def entropy_nats(rho: DensityMatrix) -> float:
    return von_neumann_entropy(rho, "nats").magnitude * LN2


def mean_energy(rho: DensityMatrix, H: HermitianOperator) -> Quantity:
    return Quantity(float(np.trace(rho.matrix @ H.matrix).real), ENERGY, "J")


def _boltzmann_weights(vals: np.ndarray, beta: float):
    """Stable weights exp(-beta(vals - ref)); returns (probs, ln Z)."""
    ref = vals.min() if beta >= 0.0 else vals.max()
    w = np.exp(-beta * (vals - ref))
    total = w.sum()
    return w / total, float(-beta * ref + math.log(total))


def _log_probabilities(vals: np.ndarray, beta: float) -> np.ndarray:
    """Exact thermal log-populations; finite even where exp() underflows."""
    ref = vals.min() if beta >= 0.0 else vals.max()
    x = -beta * (vals - ref)
    return x - math.log(np.exp(x).sum())


def _gibbs_from_beta(H: HermitianOperator, beta: float) -> GibbsState:
    vals, vecs = H.eigensystem()
    probs, log_z = _boltzmann_weights(vals, beta)
    rho = DensityMatrix((vecs * probs) @ vecs.conj().T)
    z = math.exp(log_z) if log_z < 709.0 else math.inf
    if not (z > 0.0 and math.isfinite(z)):
        raise NumericalOverflow(
            f"partition function not representable as a float (ln Z = {log_z:.6g})"
        )
    temperature = 1.0 / (_K_B * beta)
    f_eq = -log_z / beta
    return GibbsState(
        rho=rho,
        temperature=Quantity(temperature, TEMPERATURE, "K"),
        beta=Quantity(beta, _INV_ENERGY),
        partition_function=z,
        f_eq=Quantity(f_eq, ENERGY, "J"),
        log_partition_function=log_z,
    )


def gibbs_state(H: HermitianOperator, T: Quantity) -> GibbsState:
    """Thermal state exp(-H/(k_B T)) / Z at temperature T (nonzero, signed)."""
    t = _require(T, TEMPERATURE, "temperature")
    if t == 0.0:
        raise ZeroTemperature("Gibbs state undefined at T = 0")
    return _gibbs_from_beta(H, 1.0 / (_K_B * t))


def _energy_at_beta(vals: np.ndarray, beta: float) -> float:
    probs, _ = _boltzmann_weights(vals, beta)
    return float((probs * vals).sum())


def solve_inverse_temperature(
    H: HermitianOperator, E_target: Quantity
) -> GibbsState:
    """Find the Gibbs state whose mean energy equals ``E_target``.

    Mean energy is strictly decreasing in beta, so a sign-free bisection on
    beta converges for any target strictly inside the spectral range. A
    target at the uniform average tr H / d corresponds to beta = 0 and
    raises :class:`InfiniteTemperature`.
    """
    e = _require(E_target, ENERGY, "target energy")
    vals, _ = H.eigensystem()
    e_min, e_max = float(vals.min()), float(vals.max())
    spread = e_max - e_min
    if not (e_min < e < e_max):
        raise EnergyOutOfRange(
            f"target {e!r} J outside open spectral interval ({e_min!r}, {e_max!r})"
        )
    e_mean = float(vals.mean())
    if abs(e - e_mean) <= BETA_ZERO_RTOL * spread:
        raise InfiniteTemperature(
            "target equals the uniform-average energy: beta = 0 has no finite T"
        )

    # bracket: energy(0) = e_mean; expand towards the correct sign of beta
    if e < e_mean:
        lo, hi = 0.0, 1.0 / spread
        while _energy_at_beta(vals, hi) > e:
            hi *= 2.0
        b_lo, b_hi = lo, hi
    else:
        lo, hi = -1.0 / spread, 0.0
        while _energy_at_beta(vals, lo) < e:
            lo *= 2.0
        b_lo, b_hi = lo, hi

    # bisect beta all the way to float resolution, then check the energy:
    # stopping at the energy tolerance alone would leave beta (hence the
    # reported temperature) orders of magnitude less converged
    for _ in range(200):
        beta = 0.5 * (b_lo + b_hi)
        if beta <= b_lo or beta >= b_hi:
            break
        if _energy_at_beta(vals, beta) > e:
            b_lo = beta
        else:
            b_hi = beta
    beta = 0.5 * (b_lo + b_hi)
    if abs(_energy_at_beta(vals, beta) - e) <= ENERGY_MATCH_RTOL * spread:
        return _gibbs_from_beta(H, beta)
    raise NonConvergence("inverse-temperature bisection did not converge")


def nonequilibrium_free_energy(
    rho: DensityMatrix, H: HermitianOperator, T: Quantity
) -> Quantity:
    """F(rho) = tr(rho H) - T k_B S(rho), in joules."""
    t = _require(T, TEMPERATURE, "temperature")
    if t == 0.0:
        raise ZeroTemperature("free energy needs T != 0")
    e = mean_energy(rho, H).magnitude
    return Quantity(e - t * _K_B * entropy_nats(rho), ENERGY, "J")


def extractable_work(
    rho: DensityMatrix, H: HermitianOperator, T: Quantity
) -> Quantity:
    """W = k_B T D(rho || rho_th), the work recoverable against a bath at T.

    Computed through the relative entropy between the state and the thermal
    state's own spectrum; agrees with F(rho) - F_eq to numerical precision.
    """
    t = _require(T, TEMPERATURE, "temperature")
    if t == 0.0:
        raise ZeroTemperature("extractable work needs T > 0")
    if t < 0.0:
        raise NonPositiveTemperature("extractable work needs T > 0")
    p = rho.probabilities
    nz = p[p > 0.0]
    tr_rho_ln_rho = float((nz * np.log(nz)).sum())
    # ln(rho_th) from the thermal state's spectral data; the exact
    # log-populations stay accurate deep in the Boltzmann tail, where
    # re-diagonalizing the reconstructed matrix would lose them
    vals, vecs = H.eigensystem()
    log_q = _log_probabilities(vals, 1.0 / (_K_B * t))
    ln_rho_th = (vecs * log_q) @ vecs.conj().T
    tr_rho_ln_th = float(np.trace(rho.matrix @ ln_rho_th).real)
    return Quantity(_K_B * t * (tr_rho_ln_rho - tr_rho_ln_th), ENERGY, "J")


def extractable_pure_bits(
    n: int, s_per_dof: Quantity, s_max_per_dof: Quantity
) -> Quantity:
    """Asymptotic pure-bit yield n (S_max - S) for n degrees of freedom.

    Returned as a real-valued count of bits; flooring is the caller's call.
    """
    s = _require(s_per_dof, INFORMATION, "entropy per dof")
    s_max = _require(s_max_per_dof, INFORMATION, "max entropy per dof")
    if n < 0:
        raise EntropyOutOfRange("degree-of-freedom count must be >= 0")
    if not (0.0 <= s <= s_max):
        raise EntropyOutOfRange(
            f"entropy per dof must satisfy 0 <= S <= S_max, got {s!r}, {s_max!r}"
        )
    return Quantity(n * (s_max - s), INFORMATION, "bit")
