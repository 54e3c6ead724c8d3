"""Exact arithmetic on primitive Gaussian lines.

Gaussian integers, canonical line form, divisor sets, Chinese remaindering
and line synthesis, and a verifier for Bertrand-type prime gaps on lines.
"""
from .bertrand import (
    BertrandReport,
    Checkpoint,
    next_prime_index,
    prime_ap_search,
    prime_indices,
    sieve_candidates,
    verify_strong,
    verify_weak,
)
from .crt import ConstructionPlan, CrtSolution, construct_line, crt_gaussian, crt_integers, crt_line
from .divisibility import (
    DivisorWitness,
    InertProfile,
    InfiniteSetError,
    SplitProfile,
    TwoAdicProfile,
    brute_force_divisor_index,
    brute_force_divisor_set_contains,
    divisor_index,
    divisor_set_contains,
    exact_power_profile,
    gp_set_contains,
    rational_set,
    rational_set_contains,
)
from .gaussint import (
    BudgetExceeded,
    GaussianInt,
    GaussLineError,
    canonical_associate,
    divides,
    gdivmod,
    ggcd,
    gxgcd,
    is_unit,
    nu,
)
from .line import GaussianLine, from_point_direction, from_two_points, norm_at, norm_poly, point_at
from .primality import (
    GaussianFactorization,
    PrimeClass,
    PrimeTag,
    classify_prime,
    factor_gaussian,
    factor_integer,
    is_gaussian_prime,
    is_rational_prime,
    split_prime,
)

__version__ = "0.1.0"
