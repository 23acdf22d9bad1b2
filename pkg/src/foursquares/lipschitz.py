"""Exact integer-quaternion arithmetic and the congruence lattice used by
the restricted four-square solver.

Quaternions live in the Lipschitz order: all four coordinates are plain
(unbounded) Python ints in the basis 1, i, j, k with i*i = j*j = k*k = -1
and i*j = k = -j*i.  Multiplication is non-commutative, and everything
below that multiplies by a fixed element does so on the right; swapping
the side would change the lattice.
"""

from typing import NamedTuple


class Quaternion(NamedTuple):
    """Integer quaternion a0 + a1*i + a2*j + a3*k."""

    a0: int
    a1: int
    a2: int
    a3: int

    def __add__(self, other: "Quaternion") -> "Quaternion":
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(
            self.a0 + other.a0,
            self.a1 + other.a1,
            self.a2 + other.a2,
            self.a3 + other.a3,
        )

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.a0, -self.a1, -self.a2, -self.a3)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return self + (-other)

    def __mul__(self, other: "Quaternion") -> "Quaternion":
        if not isinstance(other, Quaternion):
            return NotImplemented
        a0, a1, a2, a3 = self
        b0, b1, b2, b3 = other
        return Quaternion(
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        )

    def norm(self) -> int:
        """Sum of the squared coordinates; multiplicative under *."""
        return self.a0 ** 2 + self.a1 ** 2 + self.a2 ** 2 + self.a3 ** 2

    def component_sum(self) -> int:
        """Sum of all four coordinates; same parity as norm()."""
        return self.a0 + self.a1 + self.a2 + self.a3


# Right multiplier whose effect is to fold the coordinate sum into the real
# slot, and the numerator of its inverse: (1-i-j-k) * (1+i+j+k) = 4.
_EMBED_FACTOR = Quaternion(1, -1, -1, -1)
_EXTRACT_NUMERATOR = Quaternion(1, 1, 1, 1)


def sum_embed(q: Quaternion) -> Quaternion:
    """Right-multiply by 1 - i - j - k.

    The image has real part component_sum(q) and norm 4 * norm(q), and it
    always satisfies in_norm_class.
    """
    return q * _EMBED_FACTOR


def try_unembed(b: Quaternion) -> Quaternion | None:
    """Invert sum_embed where possible.

    Right-multiplies by 1 + i + j + k and divides by 4.  Returns None when
    the division leaves the integer lattice, which happens exactly when b
    is not an embedded quaternion (see in_sum_lattice).
    """
    p = b * _EXTRACT_NUMERATOR
    if p.a0 % 4 or p.a1 % 4 or p.a2 % 4 or p.a3 % 4:
        return None
    return Quaternion(p.a0 // 4, p.a1 // 4, p.a2 // 4, p.a3 // 4)


def in_norm_class(b: Quaternion) -> bool:
    """True when norm(b) == 4 * real part (mod 8).

    A coarse necessary condition for being embedded; unlike in_sum_lattice
    it is insensitive to the signs of the imaginary coordinates.
    """
    return (b.norm() - 4 * b.a0) % 8 == 0


def in_sum_lattice(b: Quaternion) -> bool:
    """Coordinate characterization of the image of sum_embed.

    Each coordinate must be congruent mod 4 to the sum of the other three.
    Equivalent to try_unembed(b) is not None; both routes are public so
    they can be held against each other.
    """
    s = b.a0 + b.a1 + b.a2 + b.a3
    return not (
        (s - 2 * b.a0) % 4
        or (s - 2 * b.a1) % 4
        or (s - 2 * b.a2) % 4
        or (s - 2 * b.a3) % 4
    )
