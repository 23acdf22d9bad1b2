"""Brute-force ground truth for restricted four-square instances.

Everything that feeds a verification verdict is computed here from the raw
constraint definitions (squares summing to n, coordinates summing to t)
with plain integer loops.  The solver modules are imported only to be
compared against, never to help with the enumeration, so agreement between
the two routes is evidence rather than circularity.
"""

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from math import isqrt
from typing import NamedTuple

from .errors import CapacityError, ContractViolation

# enumerate/verify refuse n beyond this; one scan is O(n**1.5) integer work.
DEFAULT_ORACLE_BOUND = 10 ** 6

Quadruple = tuple[int, int, int, int]


class Mismatch(NamedTuple):
    n: int
    t: int
    oracle_exists: bool
    solver_decides: bool


class InvalidWitness(NamedTuple):
    n: int
    t: int
    representation: Quadruple | None


@dataclass
class VerificationReport:
    """Per-range agreement record between the solver and brute force."""

    n_max: int
    scanned_instances: int
    witnesses_checked: int
    mismatches: list[Mismatch]
    invalid_witnesses: list[InvalidWitness]
    elapsed: float

    @property
    def clean(self) -> bool:
        return not self.mismatches and not self.invalid_witnesses


def enumerate_representations(
    n: int,
    t: int,
    limit: int | None = None,
    bound: int = DEFAULT_ORACLE_BOUND,
) -> list[Quadruple]:
    """All quadruples (a0, a1, a2, a3) with squares summing to n and
    coordinates summing to t, in lexicographic order.

    Sign and permutation variants are distinct entries.  With limit, stops
    after that many.  Raises CapacityError for n beyond bound.
    """
    if n > bound:
        raise CapacityError(f"enumeration refused: n={n} exceeds bound {bound}")
    found: list[Quadruple] = []
    if n < 0 or (limit is not None and limit <= 0):
        return found
    s0 = isqrt(n)
    for a0 in range(-s0, s0 + 1):
        rest1 = n - a0 * a0
        s1 = isqrt(rest1)
        for a1 in range(-s1, s1 + 1):
            rest2 = rest1 - a1 * a1
            s2 = isqrt(rest2)
            head = t - a0 - a1
            for a2 in range(-s2, s2 + 1):
                a3 = head - a2
                if a3 * a3 == rest2 - a2 * a2:
                    found.append((a0, a1, a2, a3))
                    if limit is not None and len(found) >= limit:
                        return found
    return found


def _achievable_sums(n: int) -> set[int]:
    """Every coordinate sum attained by some quadruple of squares summing
    to n.  One O(n**1.5) pass; t is achievable iff enumeration for (n, t)
    would be nonempty."""
    sums: set[int] = set()
    s0 = isqrt(n)
    for a0 in range(-s0, s0 + 1):
        rest1 = n - a0 * a0
        s1 = isqrt(rest1)
        for a1 in range(-s1, s1 + 1):
            rest2 = rest1 - a1 * a1
            s2 = isqrt(rest2)
            head = a0 + a1
            for a2 in range(-s2, s2 + 1):
                rest3 = rest2 - a2 * a2
                a3 = isqrt(rest3)
                if a3 * a3 == rest3:
                    sums.add(head + a2 + a3)
                    sums.add(head + a2 - a3)
    return sums


def _scan_single_n(n: int, search_cap: int):
    """Check one n against every t in range; returns partial report fields."""
    # Comparison driver: the ground-truth side above must stay clear of
    # these imports.
    from .solver import is_representable, represent

    truth = _achievable_sums(n)
    t_max = isqrt(4 * n)
    instances = 0
    witnesses = 0
    mismatches: list[Mismatch] = []
    invalid: list[InvalidWitness] = []
    for t in range(-t_max, t_max + 1):
        instances += 1
        exists = t in truth
        decides = is_representable(n, t)
        if decides != exists:
            mismatches.append(Mismatch(n, t, exists, decides))
        if decides:
            witnesses += 1
            try:
                rep = represent(n, t, search_cap)
            except ContractViolation:
                rep = None
            quad = None if rep is None else tuple(rep)
            if quad is None or sum(c * c for c in quad) != n or sum(quad) != t:
                invalid.append(InvalidWitness(n, t, quad))
    return instances, witnesses, mismatches, invalid


def verify_range(
    n_max: int,
    jobs: int = 1,
    search_cap: int | None = None,
    bound: int = DEFAULT_ORACLE_BOUND,
) -> VerificationReport:
    """Scan every instance with 0 <= n <= n_max and t^2 <= 4n.

    Records a mismatch wherever the solver's decision disagrees with brute
    force, and an invalid witness wherever a decided-true instance yields
    no quadruple or one failing either identity.  jobs > 1 shards the scan
    across processes; the merged report does not depend on the sharding.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    if n_max > bound:
        raise CapacityError(f"scan refused: n_max={n_max} exceeds bound {bound}")
    if search_cap is None:
        from .three_squares import DEFAULT_SEARCH_CAP

        search_cap = DEFAULT_SEARCH_CAP
    start = time.perf_counter()
    worker = partial(_scan_single_n, search_cap=search_cap)
    values = range(n_max + 1)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(worker, values, chunksize=8))
    else:
        parts = [worker(n) for n in values]
    return VerificationReport(
        n_max=n_max,
        scanned_instances=sum(p[0] for p in parts),
        witnesses_checked=sum(p[1] for p in parts),
        mismatches=[m for p in parts for m in p[2]],
        invalid_witnesses=[w for p in parts for w in p[3]],
        elapsed=time.perf_counter() - start,
    )
