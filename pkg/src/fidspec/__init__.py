"""Fidelity-operator spectra and entanglement diagnostics for three
quantum many-body models: blocks of the XX chain in a transverse field, a
magnetic impurity in a 2-D s-wave superconductor, and thermal states of a
bulk BCS superconductor.
"""

__version__ = "0.1.0"

from .kernel import (
    CanonicalModes,
    ContractViolation,
    antisym_canonical,
    check_antisymmetric,
    check_density_matrix,
    check_symmetric,
    fidelity_op_spectrum,
    fidelity_op_spectrum_raw,
    psd_sqrt,
    sym_eig,
)
from .spectrum import (
    LOG_FLOOR,
    SpectrumResult,
    SpectrumStats,
    SusceptibilityPoint,
    entropies,
    log_spectrum,
    moments,
    spectrum_result,
    susceptibility,
)
from .tables import Table

__all__ = [
    "CanonicalModes",
    "ContractViolation",
    "LOG_FLOOR",
    "SpectrumResult",
    "SpectrumStats",
    "SusceptibilityPoint",
    "Table",
    "antisym_canonical",
    "check_antisymmetric",
    "check_density_matrix",
    "check_symmetric",
    "entropies",
    "fidelity_op_spectrum",
    "fidelity_op_spectrum_raw",
    "log_spectrum",
    "moments",
    "psd_sqrt",
    "spectrum_result",
    "susceptibility",
    "sym_eig",
]
