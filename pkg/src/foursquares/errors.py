"""Exception types shared across the package."""


class CapacityError(Exception):
    """An input exceeds a configured search or enumeration bound.

    Raised so callers can tell "no solution exists" apart from "the search
    was refused because it would be too expensive".
    """


class ContractViolation(RuntimeError):
    """An internal invariant failed; indicates a bug, not bad input."""
