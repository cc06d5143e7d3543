"""Jacobsthal sums, quadratic-form prime representations, and CM local factors.

The package verifies, over desk-scale prime ranges, the classical
two-squares sum identity, its a^2+ab+b^2 analogue, and the a^2+2b^2
identity, together with the point counts, local L-factors, sign laws and
Kummer characters those identities rest on.  Everything is integer-exact.
"""

from .charsums import (
    PolyModP,
    SumResult,
    jacobsthal_sum,
    qr_table,
    sum_A,
    sum_B1,
    sum_B2,
    sum_classical,
    sum_classical_half,
    sum_cubic,
)
from .curves import (
    HyperellipticModel,
    KummerValue,
    LocalFactor,
    count_points,
    kummer_character,
    local_factor_genus1,
    local_factor_genus2,
    quadratic_twist_check,
    trace_identity_check,
)
from .errors import JacobsthalError
from .fp2 import Fp2Context, Fp2Element, fp2_pow, fp2_sqrt
from .kernels import backend_name
from .modarith import (
    OddPrime,
    is_prime,
    jacobi_symbol,
    least_noncube,
    least_nonresidue,
    legendre_symbol,
    sqrt_mod,
)
from .quadforms import (
    CubicRep,
    QuadRep,
    SignReport,
    brute_force_repr,
    cornacchia,
    cubic_rep,
    epsilon_classical,
    epsilon_sqrtm2,
)
from .verify import (
    RangeSummary,
    VerifyReport,
    scan_range,
    vanishing_check,
    verify_classical,
    verify_cubic,
    verify_main,
    verify_signs,
)

__version__ = "0.1.0"

__all__ = [
    "PolyModP",
    "SumResult",
    "jacobsthal_sum",
    "qr_table",
    "sum_A",
    "sum_B1",
    "sum_B2",
    "sum_classical",
    "sum_classical_half",
    "sum_cubic",
    "HyperellipticModel",
    "KummerValue",
    "LocalFactor",
    "count_points",
    "kummer_character",
    "local_factor_genus1",
    "local_factor_genus2",
    "quadratic_twist_check",
    "trace_identity_check",
    "JacobsthalError",
    "Fp2Context",
    "Fp2Element",
    "fp2_pow",
    "fp2_sqrt",
    "backend_name",
    "OddPrime",
    "is_prime",
    "jacobi_symbol",
    "least_noncube",
    "least_nonresidue",
    "legendre_symbol",
    "sqrt_mod",
    "CubicRep",
    "QuadRep",
    "SignReport",
    "brute_force_repr",
    "cornacchia",
    "cubic_rep",
    "epsilon_classical",
    "epsilon_sqrtm2",
    "RangeSummary",
    "VerifyReport",
    "scan_range",
    "vanishing_check",
    "verify_classical",
    "verify_cubic",
    "verify_main",
    "verify_signs",
]
