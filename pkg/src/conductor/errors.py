"""Typed errors shared across the package.

The CLI maps these onto exit codes: input/validation problems exit 2,
precision exhaustion exits 3, verification failures exit 1.
"""


class InputError(ValueError):
    """Malformed user input (bad JSON, non-group table, bad flag combination)."""


class InvalidAutomorphismError(InputError):
    """Galois exponent not coprime to the conductor, or map is not an automorphism."""


class InvalidQuotientError(InputError):
    """Requested quotient level is below the automorphism order exponent."""


class ContainmentError(InputError):
    """Relative construction asked for a field that does not contain the base."""


class GroupTooLargeError(InputError):
    """Group exceeds the documented size bound for the requested operation."""


class UnsupportedPresentationError(InputError):
    """Construction needs a presentation feature this implementation does not model."""


class PrecisionExhaustedError(ArithmeticError):
    """A p-adic certificate could not be established at the working precision."""
