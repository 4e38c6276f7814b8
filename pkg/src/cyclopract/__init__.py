"""Practicality of x^n - 1 divisor degrees over F_p and Z, with count sieves."""

from .analysis import (
    AnalysisConfig,
    PrimeWindow,
    RatioStats,
    a_q_primes,
    count_z_dense,
    is_z_dense,
    lambda_order_ratio_stats,
    lambda_star_table,
    lp2_range_primes,
    omega_phi_distribution,
    omega_phi_excess,
    omega_phi_threshold,
    small_order_count,
    smooth_lambda_part_count,
    tau_threshold_count,
)
from .arith import (
    PMINUS_INFINITY,
    Factorization,
    SpfTable,
    big_omega,
    build_spf_table,
    carmichael_lambda,
    divisor_phi_pairs,
    divisors_sorted,
    euler_phi,
    factorize,
    factorize_trial,
    is_prime,
    largest_prime_factor,
    smallest_prime_factor,
    smooth_part,
    tau,
)
from .counting import (
    CountReport,
    CountRow,
    count_p_practical,
    count_p_practical_partitioned,
    count_phi_practical,
    ratio_row,
    render_csv,
    render_json,
    render_text,
)
from .errors import CapacityError
from .orders import (
    OrderTable,
    coprime_part,
    mult_order,
    mult_order_star,
    prime_power_order,
    sieve_order_star,
)
from .practicality import (
    DegreeMultiset,
    PracticalVerdict,
    coverage_check,
    degree_multiset,
    dp_coverage_oracle,
    dp_reachable_mask,
    is_p_practical,
    is_phi_practical,
    phi_degree_multiset,
    poly_factor_degrees_oracle,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisConfig",
    "CapacityError",
    "CountReport",
    "CountRow",
    "DegreeMultiset",
    "Factorization",
    "OrderTable",
    "PMINUS_INFINITY",
    "PracticalVerdict",
    "PrimeWindow",
    "RatioStats",
    "SpfTable",
    "a_q_primes",
    "big_omega",
    "build_spf_table",
    "carmichael_lambda",
    "coprime_part",
    "count_p_practical",
    "count_p_practical_partitioned",
    "count_phi_practical",
    "count_z_dense",
    "coverage_check",
    "degree_multiset",
    "divisor_phi_pairs",
    "divisors_sorted",
    "dp_coverage_oracle",
    "dp_reachable_mask",
    "euler_phi",
    "factorize",
    "factorize_trial",
    "is_p_practical",
    "is_phi_practical",
    "is_prime",
    "is_z_dense",
    "lambda_order_ratio_stats",
    "lambda_star_table",
    "largest_prime_factor",
    "lp2_range_primes",
    "mult_order",
    "mult_order_star",
    "omega_phi_distribution",
    "omega_phi_excess",
    "omega_phi_threshold",
    "phi_degree_multiset",
    "poly_factor_degrees_oracle",
    "prime_power_order",
    "ratio_row",
    "render_csv",
    "render_json",
    "render_text",
    "sieve_order_star",
    "small_order_count",
    "smallest_prime_factor",
    "smooth_lambda_part_count",
    "smooth_part",
    "tau",
    "tau_threshold_count",
]
