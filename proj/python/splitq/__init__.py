"""Exact enumeration of splitting subspaces over finite fields.

Polynomials in q cross the boundary as coefficient lists, lowest degree
first; bivariate generating functions as sorted (q-exponent, t-exponent,
coefficient) triples. Similarity class types use the same string grammar
as the CLI: "d1:p1,p2;d2:p1,..." with pairs joined by semicolons.
"""

from _splitq import (
    BudgetExceeded,
    NotRealizable,
    SplitqError,
    binom2,
    binomial,
    canonical_type,
    count_ab,
    crossings,
    eval_poly,
    f_tau,
    gaussian_binomial,
    oracle_classify,
    oracle_count_invariant,
    oracle_count_splitting,
    partitions_of,
    q_integer,
    r_values,
    ramare_f,
    sigma_main,
    sigma_simple_closed,
    sigma_via_recurrence,
    tau_i_zero_check,
    touchard_enum,
    touchard_refine,
    touchard_riordan_rhs,
    types_of_size,
    vanishing_check,
    x_polys,
    xmatrix_determinant,
)

__all__ = [
    "BudgetExceeded",
    "NotRealizable",
    "SplitqError",
    "binom2",
    "binomial",
    "canonical_type",
    "count_ab",
    "crossings",
    "eval_poly",
    "f_tau",
    "gaussian_binomial",
    "oracle_classify",
    "oracle_count_invariant",
    "oracle_count_splitting",
    "partitions_of",
    "q_integer",
    "r_values",
    "ramare_f",
    "sigma_main",
    "sigma_simple_closed",
    "sigma_via_recurrence",
    "tau_i_zero_check",
    "touchard_enum",
    "touchard_refine",
    "touchard_riordan_rhs",
    "types_of_size",
    "vanishing_check",
    "x_polys",
    "xmatrix_determinant",
]
