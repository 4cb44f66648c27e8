"""Finite-dimensional quantum states and observables, plus their file format.

Matrices live in plain numpy arrays; Hamiltonian entries are in joules,
density matrices are dimensionless. Validation tolerances follow the
package-wide convention: hermiticity and trace to 1e-9 relative, negative
eigenvalues above -1e-9 are repaired (clamped and renormalized), anything
worse is rejected.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from ..errors import FileFormatError, InvalidState
from ..units import ENERGY, TEMPERATURE, Quantity

HERMITIAN_RTOL = 1e-9
TRACE_TOL = 1e-9
PSD_FLOOR = -1e-9
NORM_TOL = 1e-9


def _as_complex_matrix(entries, what: str) -> np.ndarray:
    arr = np.asarray(entries, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
        raise InvalidState(f"{what} must be a square matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr.view(float))):
        raise InvalidState(f"{what} contains non-finite entries")
    return arr


def _check_hermitian(arr: np.ndarray, what: str) -> np.ndarray:
    scale = np.abs(arr).max()
    dev = np.abs(arr - arr.conj().T).max()
    if scale > 0 and dev > HERMITIAN_RTOL * scale:
        raise InvalidState(
            f"{what} is not Hermitian: max|A - A^dag| = {dev:.3e} "
            f"exceeds {HERMITIAN_RTOL:g} * max|A| = {HERMITIAN_RTOL * scale:.3e}"
        )
    return 0.5 * (arr + arr.conj().T)


class HermitianOperator:
    """A d x d Hermitian observable; entries in joules for Hamiltonians."""

    def __init__(self, entries):
        mat = _as_complex_matrix(entries, "operator")
        self.matrix = _check_hermitian(mat, "operator")
        self.matrix.setflags(write=False)
        self._eig: tuple[np.ndarray, np.ndarray] | None = None

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def eigensystem(self) -> tuple[np.ndarray, np.ndarray]:
        """Eigenvalues (ascending) and eigenvector columns, cached."""
        if self._eig is None:
            vals, vecs = np.linalg.eigh(self.matrix)
            self._eig = (vals, vecs)
        return self._eig

    def eigenvalues(self) -> np.ndarray:
        return self.eigensystem()[0]


class DensityMatrix:
    """A valid quantum state: Hermitian, unit trace, positive semidefinite.

    Eigenvalues in [-1e-9, 0) are clamped to zero and the spectrum is
    renormalized; larger violations raise :class:`InvalidState`.
    """

    def __init__(self, entries):
        mat = _as_complex_matrix(entries, "density matrix")
        mat = _check_hermitian(mat, "density matrix")
        tr = mat.trace().real
        if abs(tr - 1.0) > TRACE_TOL:
            raise InvalidState(f"density matrix trace {tr!r} differs from 1")
        vals, vecs = np.linalg.eigh(mat)
        if vals.min() < PSD_FLOOR:
            raise InvalidState(
                f"density matrix has eigenvalue {vals.min():.3e} below {PSD_FLOOR:g}"
            )
        vals = np.clip(vals, 0.0, None)
        vals = vals / vals.sum()
        self.probabilities = vals
        self.eigenvectors = vecs
        self.matrix = (vecs * vals) @ vecs.conj().T
        self.matrix.setflags(write=False)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @classmethod
    def maximally_mixed(cls, dim: int) -> "DensityMatrix":
        return cls(np.eye(dim) / dim)

    @classmethod
    def from_state(cls, psi: "StateVector") -> "DensityMatrix":
        amp = psi.amplitudes / np.linalg.norm(psi.amplitudes)
        return cls(np.outer(amp, amp.conj()))


class StateVector:
    """A pure state: complex amplitudes with unit norm (1e-9 tolerance)."""

    def __init__(self, amplitudes):
        amp = np.asarray(amplitudes, dtype=complex)
        if amp.ndim != 1 or amp.size < 1:
            raise InvalidState(f"state vector must be 1-d, got shape {amp.shape}")
        if not np.all(np.isfinite(amp.view(float))):
            raise InvalidState("state vector contains non-finite amplitudes")
        norm = np.linalg.norm(amp)
        if abs(norm - 1.0) > NORM_TOL:
            raise InvalidState(f"state vector norm {norm!r} differs from 1")
        self.amplitudes = amp
        self.amplitudes.setflags(write=False)

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    @classmethod
    def basis_state(cls, dim: int, index: int) -> "StateVector":
        amp = np.zeros(dim, dtype=complex)
        amp[index] = 1.0
        return cls(amp)

    def overlap(self, other: "StateVector") -> complex:
        return complex(np.vdot(self.amplitudes, other.amplitudes))


@dataclass(frozen=True)
class GibbsState:
    """Thermal state bundle: rho = exp(-H/(k_B T)) / Z.

    ``temperature`` may be negative (bounded spectra admit population
    inversion) but never zero. ``log_partition_function`` carries ln Z in a
    form that stays finite when Z itself would not.
    """

    rho: DensityMatrix
    temperature: Quantity  # K
    beta: Quantity  # 1/J
    partition_function: float
    f_eq: Quantity  # J
    log_partition_function: float

    def __post_init__(self):
        if self.temperature.dim != TEMPERATURE:
            raise InvalidState("GibbsState temperature must be in kelvin")
        if self.f_eq.dim != ENERGY:
            raise InvalidState("GibbsState f_eq must be in joules")


# -- file format ------------------------------------------------------------
#
# A matrix file is a JSON object:
#   {"dim": d, "entries": [[ [re, im], ... d pairs ], ... d rows ], "units": "J"}
# "units" is present ("J") for Hamiltonians and absent for states.
# A vector file uses a flat length-d "entries" array of [re, im] pairs.


def _parse_pair(raw, where: str, path: str) -> complex:
    if (
        not isinstance(raw, (list, tuple))
        or len(raw) != 2
        or not all(isinstance(x, (int, float)) for x in raw)
    ):
        raise FileFormatError(f"{path}: {where}: expected an [re, im] number pair")
    if not (math.isfinite(raw[0]) and math.isfinite(raw[1])):
        raise FileFormatError(f"{path}: {where}: entries must be finite")
    return complex(raw[0], raw[1])


def _load_json_object(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise FileFormatError(f"{path}: cannot read: {exc}")
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}")
    if not isinstance(raw, dict):
        raise FileFormatError(f"{path}: top level must be an object")
    return raw


def _parse_dim(raw: dict, path: str) -> int:
    dim = raw.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise FileFormatError(f"{path}: dim: expected a positive integer")
    return dim


def read_matrix(path: str) -> tuple[np.ndarray, str | None]:
    """Parse a matrix file; returns (complex d x d array, units or None)."""
    raw = _load_json_object(path)
    dim = _parse_dim(raw, path)
    entries = raw.get("entries")
    if not isinstance(entries, list) or len(entries) != dim:
        raise FileFormatError(f"{path}: entries: expected {dim} rows")
    out = np.empty((dim, dim), dtype=complex)
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != dim:
            raise FileFormatError(f"{path}: entries[{i}]: expected {dim} pairs")
        for j, cell in enumerate(row):
            out[i, j] = _parse_pair(cell, f"entries[{i}][{j}]", path)
    units = raw.get("units")
    if units is not None and units != "J":
        raise FileFormatError(f"{path}: units: only \"J\" is supported")
    return out, units


def read_vector(path: str) -> np.ndarray:
    raw = _load_json_object(path)
    dim = _parse_dim(raw, path)
    entries = raw.get("entries")
    if not isinstance(entries, list) or len(entries) != dim:
        raise FileFormatError(f"{path}: entries: expected {dim} pairs")
    out = np.empty(dim, dtype=complex)
    for i, cell in enumerate(entries):
        out[i] = _parse_pair(cell, f"entries[{i}]", path)
    return out


def load_hamiltonian(path: str) -> HermitianOperator:
    mat, _units = read_matrix(path)
    try:
        return HermitianOperator(mat)
    except InvalidState as exc:
        raise FileFormatError(f"{path}: {exc}")


def load_density(path: str) -> DensityMatrix:
    mat, units = read_matrix(path)
    if units is not None:
        raise FileFormatError(f"{path}: units: states are dimensionless")
    try:
        return DensityMatrix(mat)
    except InvalidState as exc:
        raise FileFormatError(f"{path}: {exc}")


def load_state_vector(path: str) -> StateVector:
    amp = read_vector(path)
    try:
        return StateVector(amp)
    except InvalidState as exc:
        raise FileFormatError(f"{path}: {exc}")


def _fmt(x: float) -> float:
    # round-trip through 17 significant digits preserves the double exactly
    return float(f"{x:.17g}")


def write_matrix(path: str, matrix: np.ndarray, units: str | None = None) -> None:
    mat = np.asarray(matrix, dtype=complex)
    obj: dict = {
        "dim": mat.shape[0],
        "entries": [
            [[_fmt(cell.real), _fmt(cell.imag)] for cell in row] for row in mat
        ],
    }
    if units is not None:
        obj["units"] = units
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh)
        fh.write("\n")


def write_vector(path: str, amplitudes: np.ndarray) -> None:
    amp = np.asarray(amplitudes, dtype=complex)
    obj = {
        "dim": amp.size,
        "entries": [[_fmt(a.real), _fmt(a.imag)] for a in amp],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh)
        fh.write("\n")
