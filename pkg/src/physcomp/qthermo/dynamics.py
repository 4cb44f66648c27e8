"""Unitary dynamics: the bit-flip Hamiltonian, time evolution, energy spread.

A qubit driven by H = -E sigma_x rotates |0> into |1> in time pi hbar / 2E,
the fastest any mean energy E above ground allows.
"""

from __future__ import annotations

import numpy as np

from ..errors import NegativeInput, NonPositiveEnergy
from ..units import CONSTANTS, ENERGY, TIME, DimensionMismatch, Quantity
from .states import DensityMatrix, HermitianOperator, StateVector

_HBAR = CONSTANTS.hbar.magnitude


def bitflip_hamiltonian(E: Quantity) -> HermitianOperator:
    """The 2x2 driving operator -E sigma_x (off-diagonal -E, in joules)."""
    if not isinstance(E, Quantity) or E.dim != ENERGY:
        raise DimensionMismatch("bit-flip energy must be in joules")
    if E.magnitude <= 0.0:
        raise NonPositiveEnergy(f"bit-flip energy must be positive, got {E}")
    e = E.magnitude
    return HermitianOperator([[0.0, -e], [-e, 0.0]])


def evolve(H: HermitianOperator, t: Quantity, psi: StateVector) -> StateVector:
    """Apply exp(-i H t / hbar) to a pure state via spectral decomposition."""
    if not isinstance(t, Quantity) or t.dim != TIME:
        raise DimensionMismatch("evolution time must be in seconds")
    if t.magnitude < 0.0:
        raise NegativeInput("evolution time must be >= 0")
    vals, vecs = H.eigensystem()
    phases = np.exp(-1j * vals * (t.magnitude / _HBAR))
    amp = vecs @ (phases * (vecs.conj().T @ psi.amplitudes))
    return StateVector(amp)


def energy_spread(rho: DensityMatrix, H: HermitianOperator) -> Quantity:
    """Standard deviation of energy, sqrt(tr rho H^2 - (tr rho H)^2)."""
    h = H.matrix
    mean = float(np.trace(rho.matrix @ h).real)
    mean_sq = float(np.trace(rho.matrix @ h @ h).real)
    var = max(mean_sq - mean * mean, 0.0)
    return Quantity(float(np.sqrt(var)), ENERGY, "J")
