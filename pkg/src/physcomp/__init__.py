"""Physical computational complexity toolkit.

Computes the physical counterparts of time and space complexity for
finite-dimensional quantum systems and closed-form physical systems:
op budgets from energy and time, memory from negentropy, free energy as
the unified resource, with sub-engines for quantum thermodynamics, black
hole computers, reference hardware, and assembly pathways.
"""

from . import assembly, blackhole, catalog, measures, qthermo, units
from .errors import InputError, NumericalError, PhyscompError
from .units import CONSTANTS, Quantity, constants, entropy_convert

__version__ = "0.1.0"

__all__ = [
    "CONSTANTS",
    "InputError",
    "NumericalError",
    "PhyscompError",
    "Quantity",
    "__version__",
    "assembly",
    "blackhole",
    "catalog",
    "constants",
    "entropy_convert",
    "measures",
    "qthermo",
    "units",
]
