"""Mertens-type constants M(q, a), B(q, a) and C(q, a) for primes in
arithmetic progressions, to a certified number of decimal digits."""

from .constants import (
    ConstantRecord,
    NumericFault,
    Params,
    compute_all,
    compute_B_all,
    compute_C_all,
    compute_gamma,
    compute_M_all,
    compute_meissel_mertens,
    select_params,
)
from .mp import PrecisionContext, truncate_decimal

__version__ = "0.1.0"

__all__ = [
    "ConstantRecord",
    "NumericFault",
    "Params",
    "PrecisionContext",
    "compute_all",
    "compute_B_all",
    "compute_C_all",
    "compute_M_all",
    "compute_gamma",
    "compute_meissel_mertens",
    "select_params",
    "truncate_decimal",
]
