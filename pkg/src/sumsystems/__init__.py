"""Exact construction, verification and counting of m-part sum systems."""

from .arith import (
    ArithmeticFunction,
    PrimeFactorisation,
    associated_divisor,
    big_omega,
    classical_divisor,
    convolution_power,
    convolve,
    divisors,
    factorise,
    mobius,
    modified_mobius,
    nontrivial_divisor,
    squarefree_ordered_count,
)
from .counting import (
    CountResult,
    DivisorSumReport,
    binomial_inversion,
    binomial_transform,
    brute_force_count,
    count_by_recurrence,
    count_m_part,
    count_two_part,
    count_unordered,
    divisor_sum_check,
    stirling2,
    two_dim_fixed_tuple,
)
from .jof import (
    CapExceeded,
    DEFAULT_CAP,
    count_for_tuple,
    enumerate_jofs,
    infer_parts,
    jof_to_pairs,
    jof_to_text,
    ordered_factorisations,
    parse_jof_text,
    partial_products,
    validate,
)
from .systems import (
    CentredSumSystem,
    SumAndDistanceSystem,
    SumSystem,
    build_centred,
    build_sum_system,
    centre,
    minkowski_sum,
    sigma_a,
    system_from_json,
    system_to_json,
    tau_c,
    to_sum_and_distance,
    verify_centred,
    verify_sum_system,
)

__version__ = "0.1.0"

__all__ = [
    "ArithmeticFunction",
    "CapExceeded",
    "CentredSumSystem",
    "CountResult",
    "DEFAULT_CAP",
    "DivisorSumReport",
    "PrimeFactorisation",
    "SumAndDistanceSystem",
    "SumSystem",
    "associated_divisor",
    "big_omega",
    "binomial_inversion",
    "binomial_transform",
    "brute_force_count",
    "build_centred",
    "build_sum_system",
    "centre",
    "classical_divisor",
    "convolution_power",
    "convolve",
    "count_by_recurrence",
    "count_for_tuple",
    "count_m_part",
    "count_two_part",
    "count_unordered",
    "divisor_sum_check",
    "divisors",
    "enumerate_jofs",
    "factorise",
    "infer_parts",
    "jof_to_pairs",
    "jof_to_text",
    "minkowski_sum",
    "mobius",
    "modified_mobius",
    "nontrivial_divisor",
    "ordered_factorisations",
    "parse_jof_text",
    "partial_products",
    "sigma_a",
    "squarefree_ordered_count",
    "stirling2",
    "system_from_json",
    "system_to_json",
    "tau_c",
    "to_sum_and_distance",
    "two_dim_fixed_tuple",
    "validate",
    "verify_centred",
    "verify_sum_system",
]
