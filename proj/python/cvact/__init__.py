"""Quantum correlations of two-mode Gaussian states.

Thin Python layer over the C++ core: covariance-matrix algebra, Fock-basis
truncation through multidimensional Hermite recurrences, output negativity of
the CNOT activation protocol with its closed forms and Husimi lower bounds,
and the no-activation certificate machinery.
"""

from ._core import (
    CvactError,
    NegativityResult,
    StandardFormParams,
    activation_negativity_dense,
    assemble_standard_form,
    bound_extrema,
    build_r_matrix,
    commutator_char_fn,
    conditional_state,
    faithfulness_check,
    fock_elements,
    husimi_at,
    is_classical,
    is_symplectic,
    lower_bound,
    negativity_coherent_mixture,
    negativity_pure,
    negativity_truncated,
    ppt_separability,
    product_noise_compose,
    run_nogo_trials,
    standard_form_invariants,
)
from ._core import __version__

__all__ = [
    "CvactError",
    "NegativityResult",
    "StandardFormParams",
    "activation_negativity_dense",
    "assemble_standard_form",
    "bound_extrema",
    "build_r_matrix",
    "commutator_char_fn",
    "conditional_state",
    "faithfulness_check",
    "fock_elements",
    "husimi_at",
    "is_classical",
    "is_symplectic",
    "lower_bound",
    "negativity_coherent_mixture",
    "negativity_pure",
    "negativity_truncated",
    "ppt_separability",
    "product_noise_compose",
    "run_nogo_trials",
    "standard_form_invariants",
    "__version__",
]
