"""Tests for the brute-force enumeration and the range verifier."""

from math import isqrt

import pytest

from foursquares.errors import CapacityError
from foursquares.oracle import Mismatch, enumerate_representations, verify_range


def test_enumerate_examples():
    assert enumerate_representations(0, 0) == [(0, 0, 0, 0)]
    assert enumerate_representations(1, 1) == [
        (0, 0, 0, 1), (0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 0),
    ]
    assert enumerate_representations(8, 2) == []


def test_enumerate_lexicographic_order():
    for n, t in [(5, 1), (12, 0), (25, 3)]:
        found = enumerate_representations(n, t)
        assert found == sorted(found)


def test_enumerate_self_consistency():
    for n in range(0, 30):
        for t in range(-isqrt(4 * n), isqrt(4 * n) + 1):
            for quad in enumerate_representations(n, t):
                assert sum(c * c for c in quad) == n
                assert sum(quad) == t


def test_enumerate_limit():
    full = enumerate_representations(1, 1)
    assert enumerate_representations(1, 1, limit=2) == full[:2]
    assert enumerate_representations(1, 1, limit=0) == []
    assert enumerate_representations(1, 1, limit=100) == full


def test_enumerate_negative_n_is_empty():
    assert enumerate_representations(-4, 0) == []


def test_enumerate_negation_symmetry():
    for n in range(0, 30):
        for t in range(0, isqrt(4 * n) + 1):
            plus = enumerate_representations(n, t)
            minus = enumerate_representations(n, -t)
            assert len(plus) == len(minus)
            assert sorted(tuple(-c for c in quad) for quad in plus) == sorted(minus)


def test_enumerate_counts_partition_unrestricted_count():
    # summing restricted counts over all t must give the plain four-square
    # count, computed here by an independent direct loop
    for n in range(0, 51):
        s = isqrt(n)
        unrestricted = 0
        for a0 in range(-s, s + 1):
            for a1 in range(-s, s + 1):
                for a2 in range(-s, s + 1):
                    for a3 in range(-s, s + 1):
                        if a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3 == n:
                            unrestricted += 1
        restricted_total = sum(
            len(enumerate_representations(n, t))
            for t in range(-isqrt(4 * n), isqrt(4 * n) + 1)
        )
        assert restricted_total == unrestricted


def test_enumerate_capacity_bound():
    with pytest.raises(CapacityError):
        enumerate_representations(10 ** 6 + 1, 0)
    with pytest.raises(CapacityError):
        enumerate_representations(101, 1, bound=100)
    assert enumerate_representations(101, 1, bound=101) != []


def test_verify_range_zero():
    report = verify_range(0)
    assert report.scanned_instances == 1
    assert report.witnesses_checked == 1
    assert report.clean


def test_verify_range_small():
    report = verify_range(10)
    assert report.clean
    assert report.scanned_instances == sum(2 * isqrt(4 * n) + 1 for n in range(11))
    assert report.elapsed >= 0


def test_verify_range_parallel_matches_serial():
    serial = verify_range(40, jobs=1)
    parallel = verify_range(40, jobs=2)
    assert serial.scanned_instances == parallel.scanned_instances
    assert serial.witnesses_checked == parallel.witnesses_checked
    assert serial.mismatches == parallel.mismatches
    assert serial.invalid_witnesses == parallel.invalid_witnesses


def test_verify_range_rejects_bad_input():
    with pytest.raises(ValueError):
        verify_range(-1)
    with pytest.raises(CapacityError):
        verify_range(10 ** 6 + 1)


def test_verify_range_detects_decision_lies(monkeypatch):
    # cripple the decision procedure and check the scan actually notices
    import foursquares.solver as solver

    real = solver.is_representable
    monkeypatch.setattr(
        solver, "is_representable",
        lambda n, t: (not real(n, t)) if (n, t) == (5, 1) else real(n, t),
    )
    report = verify_range(5)
    assert Mismatch(5, 1, True, False) in report.mismatches


def test_verify_range_detects_bad_witnesses(monkeypatch):
    import foursquares.solver as solver

    real = solver.represent
    monkeypatch.setattr(
        solver, "represent",
        lambda n, t, cap: (real(4, 0, cap) if (n, t) == (4, 2) else real(n, t, cap)),
    )
    report = verify_range(4)
    assert any(w.n == 4 and w.t == 2 for w in report.invalid_witnesses)
    assert not report.mismatches
