"""Young row-strict quasisymmetric Schur functions: exact combinatorics
for composition tableaux, basis expansions, the Hopf coproduct, skew
functions, Schensted-style insertion and the Littlewood-Richardson rule.
"""

from qsymtab._core import (
    complement,
    compositions_of,
    coproduct_r,
    enumerate_fillings,
    expand_in_f,
    expand_skew_in_f,
    f_map,
    h_inverse,
    h_map,
    insert,
    lc_covers_of,
    lr_coefficients,
    multiply_r_schur,
    omega_f,
    phi,
    phi_tilde,
    reading_word,
    rho,
    rho_inverse,
    run_suite,
    schur_to_monomials,
    shape_of,
    skew_r,
    standardize,
    suite_names,
    to_monomials,
    transition_matrix,
    validate,
)

__all__ = [
    "complement",
    "compositions_of",
    "coproduct_r",
    "enumerate_fillings",
    "expand_in_f",
    "expand_skew_in_f",
    "f_map",
    "h_inverse",
    "h_map",
    "insert",
    "lc_covers_of",
    "lr_coefficients",
    "multiply_r_schur",
    "omega_f",
    "phi",
    "phi_tilde",
    "reading_word",
    "rho",
    "rho_inverse",
    "run_suite",
    "schur_to_monomials",
    "shape_of",
    "skew_r",
    "standardize",
    "suite_names",
    "to_monomials",
    "transition_matrix",
    "validate",
]
