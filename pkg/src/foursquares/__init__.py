"""Sums of four integer squares with a prescribed coordinate sum.

Decide whether an integer n can be written as a0^2 + a1^2 + a2^2 + a3^2
with a0 + a1 + a2 + a3 equal to a prescribed t, construct an explicit
witness when it can, and cross-check both against an independent
brute-force oracle.
"""

from .errors import CapacityError, ContractViolation
from .lipschitz import (
    Quaternion,
    in_norm_class,
    in_sum_lattice,
    sum_embed,
    try_unembed,
)
from .oracle import (
    DEFAULT_ORACLE_BOUND,
    InvalidWitness,
    Mismatch,
    VerificationReport,
    enumerate_representations,
    verify_range,
)
from .solver import (
    align_signs,
    build_candidate,
    is_representable,
    represent,
    unrepresentable_reason,
)
from .three_squares import (
    DEFAULT_SEARCH_CAP,
    ThreeSquareTriple,
    is_sum_of_three_squares,
    three_square_decomposition,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "ContractViolation",
    "Quaternion",
    "in_norm_class",
    "in_sum_lattice",
    "sum_embed",
    "try_unembed",
    "DEFAULT_ORACLE_BOUND",
    "InvalidWitness",
    "Mismatch",
    "VerificationReport",
    "enumerate_representations",
    "verify_range",
    "align_signs",
    "build_candidate",
    "is_representable",
    "represent",
    "unrepresentable_reason",
    "DEFAULT_SEARCH_CAP",
    "ThreeSquareTriple",
    "is_sum_of_three_squares",
    "three_square_decomposition",
    "__version__",
]
