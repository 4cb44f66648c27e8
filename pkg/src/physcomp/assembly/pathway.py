"""Assembly pathways: ordered join steps building a target from basic parts.

Objects are strings over a basis of single-character symbols; a join is
concatenation. A pathway is valid when every step's operands are either
basis symbols or products of strictly earlier steps, and the last product
is the target. Steps may carry a free energy, in which case the pathway's
free physical complexity is the sum.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from ..errors import (
    FileFormatError,
    InvalidPathway,
    MissingAnnotation,
    SymbolNotInBasis,
)
from ..units import ENERGY, Quantity


def check_basis(basis) -> frozenset[str]:
    symbols = frozenset(basis)
    if not symbols:
        raise SymbolNotInBasis("basis must contain at least one symbol")
    for sym in symbols:
        if not isinstance(sym, str) or len(sym) != 1:
            raise SymbolNotInBasis(f"basis symbols must be single characters, got {sym!r}")
    return symbols


@dataclass(frozen=True)
class AssemblyPathway:
    """A join sequence; ``steps[i] = (left, right)`` producing ``left + right``."""

    basis: frozenset[str]
    steps: tuple[tuple[str, str], ...]
    target: str
    step_free_energy: tuple[Quantity, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "basis", check_basis(self.basis))
        object.__setattr__(
            self, "steps", tuple((str(l), str(r)) for l, r in self.steps)
        )
        self.validate()

    @property
    def products(self) -> tuple[str, ...]:
        return tuple(l + r for l, r in self.steps)

    def validate(self) -> None:
        available = set(self.basis)
        for k, (left, right) in enumerate(self.steps):
            for operand in (left, right):
                if operand not in available:
                    raise InvalidPathway(
                        f"step {k}: operand {operand!r} is neither a basis "
                        "symbol nor an earlier product"
                    )
            available.add(left + right)
        produced = self.products[-1] if self.steps else None
        if self.steps:
            if produced != self.target:
                raise InvalidPathway(
                    f"final product {produced!r} does not equal target {self.target!r}"
                )
        else:
            if self.target not in self.basis:
                raise InvalidPathway(
                    f"empty pathway target {self.target!r} must be a basis symbol"
                )
        if self.step_free_energy is not None:
            if len(self.step_free_energy) != len(self.steps):
                raise InvalidPathway(
                    f"{len(self.step_free_energy)} free energies for "
                    f"{len(self.steps)} steps"
                )
            for k, q in enumerate(self.step_free_energy):
                if not isinstance(q, Quantity) or q.dim != ENERGY:
                    raise InvalidPathway(f"step {k}: free energy must be in joules")


def pathway_free_phi(p: AssemblyPathway) -> Quantity:
    """Total free energy of the pathway: the sum over its annotated steps."""
    p.validate()
    if not p.steps:
        return Quantity(0.0, ENERGY, "J")
    if p.step_free_energy is None:
        raise MissingAnnotation("pathway carries no per-step free energies")
    total = sum(q.magnitude for q in p.step_free_energy)
    return Quantity(total, ENERGY, "J")


# -- file format ------------------------------------------------------------
#
# {"basis": "ab", "steps": [["a","b"], ["ab","ab"]],
#  "free_energy_joules": [2.0, 3.0]}
# "target" may be given explicitly; otherwise it is the last step's product.


def pathway_to_dict(p: AssemblyPathway) -> dict:
    obj: dict = {
        "basis": "".join(sorted(p.basis)),
        "steps": [[l, r] for l, r in p.steps],
        "target": p.target,
    }
    if p.step_free_energy is not None:
        obj["free_energy_joules"] = [q.magnitude for q in p.step_free_energy]
    return obj


def pathway_from_dict(obj: dict, where: str = "pathway") -> AssemblyPathway:
    if not isinstance(obj, dict):
        raise FileFormatError(f"{where}: expected an object")
    basis = obj.get("basis")
    if not isinstance(basis, str) or not basis:
        raise FileFormatError(f"{where}: basis: expected a non-empty string of symbols")
    steps_raw = obj.get("steps")
    if not isinstance(steps_raw, list):
        raise FileFormatError(f"{where}: steps: expected an array")
    steps = []
    for k, step in enumerate(steps_raw):
        if (
            not isinstance(step, list)
            or len(step) != 2
            or not all(isinstance(s, str) and s for s in step)
        ):
            raise FileFormatError(
                f"{where}: steps[{k}]: expected a [left, right] pair of strings"
            )
        steps.append((step[0], step[1]))
    energies = None
    if "free_energy_joules" in obj:
        raw = obj["free_energy_joules"]
        if not isinstance(raw, list) or not all(
            isinstance(x, (int, float)) and not isinstance(x, bool) and math.isfinite(x)
            for x in raw
        ):
            raise FileFormatError(
                f"{where}: free_energy_joules: expected an array of finite numbers"
            )
        energies = tuple(Quantity(float(x), ENERGY, "J") for x in raw)
    target = obj.get("target")
    if target is None:
        if not steps:
            raise FileFormatError(
                f"{where}: empty pathway needs an explicit \"target\""
            )
        target = steps[-1][0] + steps[-1][1]
    elif not isinstance(target, str) or not target:
        raise FileFormatError(f"{where}: target: expected a non-empty string")
    try:
        return AssemblyPathway(
            basis=frozenset(basis),
            steps=tuple(steps),
            target=target,
            step_free_energy=energies,
        )
    except (InvalidPathway, SymbolNotInBasis) as exc:
        raise FileFormatError(f"{where}: {exc}")


def load_pathway(path: str) -> AssemblyPathway:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise FileFormatError(f"{path}: cannot read: {exc}")
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}")
    return pathway_from_dict(raw, where=path)


def write_pathway(path: str, p: AssemblyPathway) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(pathway_to_dict(p), fh)
        fh.write("\n")
