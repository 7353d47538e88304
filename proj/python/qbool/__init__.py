"""Numerical laboratory for quantum boolean functions.

Operators are plain complex numpy matrices of dimension 2**n; qubit 0 is the
most significant tensor factor. Spectra are dicts keyed by IXYZ words.
"""

from qbool._core import (
    Chain,
    Oracle,
    anticommuting_combination,
    apply_noise,
    balance,
    bit_oracle,
    degree,
    depolarize,
    discrimination_probability,
    from_spectrum,
    goldreich_levin,
    hastad_test_probability,
    high_level_weight,
    hypercontractivity_check,
    influences,
    inner_product,
    is_quantum_boolean,
    locality_test_probability,
    nearest_dictator,
    pauli_matrix,
    phase_oracle,
    projector_qbf,
    schatten_norm,
    sign_function,
    spectrum,
    spin_flip,
    stabilizer_test_probability,
    stabilizer_test_sample,
    total_influence,
    variance,
    weight_per_level,
)

__all__ = [
    "Chain",
    "Oracle",
    "anticommuting_combination",
    "apply_noise",
    "balance",
    "bit_oracle",
    "degree",
    "depolarize",
    "discrimination_probability",
    "from_spectrum",
    "goldreich_levin",
    "hastad_test_probability",
    "high_level_weight",
    "hypercontractivity_check",
    "influences",
    "inner_product",
    "is_quantum_boolean",
    "locality_test_probability",
    "nearest_dictator",
    "pauli_matrix",
    "phase_oracle",
    "projector_qbf",
    "schatten_norm",
    "sign_function",
    "spectrum",
    "spin_flip",
    "stabilizer_test_probability",
    "stabilizer_test_sample",
    "total_influence",
    "variance",
    "weight_per_level",
]

__version__ = "0.1.0"
