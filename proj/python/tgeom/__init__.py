"""World-function geometry on finite point sets.

Vectors are ``(origin, end)`` tuples of point labels.
"""

from ._tgeom import (
    SigmaSpace,
    TgeomError,
    build_finite_table,
    build_grid_space,
    chain_sum,
    construct_guaranteed,
    equivalence_classes,
    equivalent,
    euclidean_sigma,
    guaranteed_case,
    is_symmetric,
    negate,
    norm_squared,
    oracle,
    perturb_table,
    read_sigma_table,
    run_cli,
    scalar_product,
    solve_combination,
    survey_linearity,
    verify_identities,
    write_sigma_table,
)

__all__ = [
    "SigmaSpace",
    "TgeomError",
    "build_finite_table",
    "build_grid_space",
    "chain_sum",
    "construct_guaranteed",
    "equivalence_classes",
    "equivalent",
    "euclidean_sigma",
    "guaranteed_case",
    "is_symmetric",
    "negate",
    "norm_squared",
    "oracle",
    "perturb_table",
    "read_sigma_table",
    "run_cli",
    "scalar_product",
    "solve_combination",
    "survey_linearity",
    "verify_identities",
    "write_sigma_table",
]
