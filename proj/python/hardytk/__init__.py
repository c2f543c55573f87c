"""Many-particle Hardy inequality toolkit.

Thin wrapper around the C++ core. Configurations are (N, d) numpy arrays;
stochastic results come back as dicts carrying mean, stderr, sample count and
seed so runs are reproducible.
"""

from ._core import (
    ab_mode_quotient,
    beta_delta,
    case_b_bound,
    circumradius_inv_sq,
    complex_sum_identity,
    fermi_bound,
    field_pairwise,
    field_pairwise_div,
    field_pairwise_norm_sq,
    flux_field,
    gaussian_closed_forms,
    gaussian_upper_bound,
    gradient_split_residual,
    hardy_lower_bound,
    hardy_quotient,
    k_asymptotic_bound,
    k_objective,
    magnetic_constant,
    magnetic_constant_float,
    maximize_K,
    menger_b,
    naive_bound,
    odd_quotient,
    one_d_constant,
    pair_density,
    triangle_chain,
    triple_density,
    verify_suite,
    CoincidentPointsError,
    NotAntisymmetricError,
)

__all__ = [
    "ab_mode_quotient",
    "beta_delta",
    "case_b_bound",
    "circumradius_inv_sq",
    "complex_sum_identity",
    "fermi_bound",
    "field_pairwise",
    "field_pairwise_div",
    "field_pairwise_norm_sq",
    "flux_field",
    "gaussian_closed_forms",
    "gaussian_upper_bound",
    "gradient_split_residual",
    "hardy_lower_bound",
    "hardy_quotient",
    "k_asymptotic_bound",
    "k_objective",
    "magnetic_constant",
    "magnetic_constant_float",
    "maximize_K",
    "menger_b",
    "naive_bound",
    "odd_quotient",
    "one_d_constant",
    "pair_density",
    "triangle_chain",
    "triple_density",
    "verify_suite",
    "CoincidentPointsError",
    "NotAntisymmetricError",
]

__version__ = "0.1.0"
