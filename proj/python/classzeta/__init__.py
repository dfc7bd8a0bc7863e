"""Class numbers of imaginary quadratic fields and the associated
class-number zeta function.

Everything lives in the compiled extension; this package just re-exports it.
"""

from ._core import (  # noqa: F401
    DEFAULT_ORDER,
    __version__,
    artin_mazur_from_n,
    census,
    char_poly_product_check,
    class_number_dirichlet,
    class_number_forms,
    dold_residues,
    euler_from_k,
    expand_predicted,
    extract_n,
    is_fundamental,
    k_from_n,
    kronecker,
    lambert_from_k,
    lefschetz_counts,
    moebius,
    n_from_k,
    pole_zero_report,
    predicted_counts,
    predicted_zeta,
    reciprocal_support,
    reduced_forms,
    report,
    verify_census,
    watkins_table,
)
