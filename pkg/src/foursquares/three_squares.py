"""Sums of three integer squares: Legendre decision test plus witness search."""

from math import isqrt
from typing import NamedTuple

from .errors import CapacityError, ContractViolation

# Largest m the witness search accepts by default.  The search is O(m) exact
# integer work, so the cap makes the cost bound explicit instead of hanging.
DEFAULT_SEARCH_CAP = 10 ** 8


class ThreeSquareTriple(NamedTuple):
    """Sorted witness b1 <= b2 <= b3 with b1^2 + b2^2 + b3^2 == m."""

    b1: int
    b2: int
    b3: int


def is_sum_of_three_squares(m: int) -> bool:
    """Legendre's criterion: m >= 0 is a sum of three squares iff it is not
    of the form 4**a * (8*b + 7).  Logarithmic time, no factoring."""
    if m < 0:
        return False
    while m and m % 4 == 0:
        m //= 4
    return m % 8 != 7


def three_square_decomposition(
    m: int, search_cap: int = DEFAULT_SEARCH_CAP
) -> ThreeSquareTriple | None:
    """Lexicographically smallest sorted triple summing (in squares) to m.

    Returns None when no decomposition exists.  Values that pass the
    criterion but exceed search_cap raise CapacityError, so callers can
    tell "impossible" apart from "search refused".
    """
    if search_cap <= 0:
        raise ValueError(f"search_cap must be positive, got {search_cap}")
    if not is_sum_of_three_squares(m):
        return None
    if m > search_cap:
        raise CapacityError(
            f"three-square witness search refused: m={m} exceeds cap {search_cap}"
        )
    for b1 in range(isqrt(m // 3) + 1):
        rest1 = m - b1 * b1
        # b2 <= b3 forces b2*b2 <= rest1/2, and then b3 >= b2 is automatic.
        for b2 in range(b1, isqrt(rest1 // 2) + 1):
            rest2 = rest1 - b2 * b2
            b3 = isqrt(rest2)
            if b3 * b3 == rest2:
                return ThreeSquareTriple(b1, b2, b3)
    raise ContractViolation(f"criterion accepted m={m} but the search found no triple")
