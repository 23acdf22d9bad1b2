"""Decide and construct four-square representations with a prescribed
coordinate sum.

represent() runs a fully deterministic pipeline:

  1. (n, t) is representable iff n and t share parity, t^2 <= 4n, and
     4n - t^2 is a sum of three squares;
  2. a witness triple for 4n - t^2 is placed after the prescribed sum t,
     giving the candidate (t, b1, b2, b3);
  3. signs of the last three coordinates are flipped until the candidate
     lies in the embedded lattice (at most 8 membership tests);
  4. un-embedding yields a quadruple whose squares sum to n and whose
     coordinates sum to t; both identities are re-checked before returning.
"""

from itertools import product

from .errors import ContractViolation
from .lipschitz import Quaternion, in_norm_class, in_sum_lattice, try_unembed
from .three_squares import (
    DEFAULT_SEARCH_CAP,
    ThreeSquareTriple,
    is_sum_of_three_squares,
    three_square_decomposition,
)

REASON_PARITY = "parity"
REASON_RANGE = "range"
REASON_CRITERION = "criterion"

# All +, then the last sign flipped first; fixed order keeps output stable.
_SIGN_PATTERNS = tuple(product((1, -1), repeat=3))


def unrepresentable_reason(n: int, t: int) -> str | None:
    """None when (n, t) is representable, else the first gate that fails.

    parity: squares and coordinates always agree mod 2, so n != t mod 2
    is hopeless.  range: coordinate sums obey t^2 <= 4n (Cauchy-Schwarz),
    and negative n is out.  criterion: 4n - t^2 fails the three-square test.
    """
    if (n - t) % 2:
        return REASON_PARITY
    if n < 0 or t * t > 4 * n:
        return REASON_RANGE
    if not is_sum_of_three_squares(4 * n - t * t):
        return REASON_CRITERION
    return None


def is_representable(n: int, t: int) -> bool:
    """True iff n is a sum of four integer squares with coordinate sum t."""
    return unrepresentable_reason(n, t) is None


def build_candidate(t: int, triple: ThreeSquareTriple) -> Quaternion:
    """Assemble (t, b1, b2, b3), the embedding candidate for the instance.

    Raises ContractViolation unless the result lands in the norm class.
    That cannot happen when the triple decomposes 4n - t^2 for some n of
    t's parity, since then the norm is 4n == 4t (mod 8) automatically.
    """
    candidate = Quaternion(t, triple[0], triple[1], triple[2])
    if not in_norm_class(candidate):
        raise ContractViolation(
            f"candidate {candidate} escapes the norm class; "
            "inconsistent (t, triple) pair"
        )
    return candidate


def align_signs(b: Quaternion) -> Quaternion:
    """Flip signs of the last three coordinates until the result embeds.

    The real coordinate is never touched; it carries the prescribed sum.
    Every member of the norm class admits at least one working pattern,
    and the first hit in the fixed pattern order is returned, so the
    result is deterministic.  Anything outside the norm class raises.
    """
    for s1, s2, s3 in _SIGN_PATTERNS:
        flipped = Quaternion(b.a0, s1 * b.a1, s2 * b.a2, s3 * b.a3)
        if in_sum_lattice(flipped):
            return flipped
    raise ContractViolation(
        f"no sign pattern embeds {b}; input violates the norm-class precondition"
    )


def represent(
    n: int, t: int, search_cap: int = DEFAULT_SEARCH_CAP
) -> Quaternion | None:
    """Quadruple with squares summing to n and coordinates summing to t,
    or None when no such quadruple exists.

    Deterministic.  CapacityError propagates from the triple search when
    4n - t^2 exceeds search_cap.  Both defining identities are checked
    before returning, so a non-None result is always a valid witness.
    """
    if not is_representable(n, t):
        return None
    triple = three_square_decomposition(4 * n - t * t, search_cap)
    assert triple is not None  # criterion already passed
    aligned = align_signs(build_candidate(t, triple))
    result = try_unembed(aligned)
    if result is None:
        raise ContractViolation(f"aligned candidate {aligned} failed to un-embed")
    if result.norm() != n or result.component_sum() != t:
        raise ContractViolation(
            f"solver produced invalid witness {result} for n={n}, t={t}"
        )
    return result
