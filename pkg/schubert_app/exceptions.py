# schubert_app/exceptions.py
"""Errors raised by the engine.

Management commands turn any ``SchubertError`` into a ``CommandError``;
invariant violations carry a ``witness`` dict that ends up in reports.
"""


class SchubertError(Exception):
    """Base class for every engine error."""


class WindowMismatch(SchubertError, ValueError):
    pass


class InvalidPermutation(SchubertError, ValueError):
    pass


class InvalidWeight(SchubertError, ValueError):
    pass


class InvalidComposition(SchubertError, ValueError):
    pass


class InvalidIndex(SchubertError, ValueError):
    """Malformed Grassmannian index, partition or incidence pair."""


class WordLimitExceeded(SchubertError):
    pass


class InvariantViolation(SchubertError):
    """A mathematical identity failed; the computation must not continue."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = dict(witness or {})


class NegativityViolation(InvariantViolation):
    pass


class SignViolation(InvariantViolation):
    pass


class SupportViolation(InvariantViolation):
    pass


class ConventionViolation(InvariantViolation):
    """The polynomial conventions produced something the theory forbids."""


class ExpansionCapExceeded(SchubertError):
    pass


class AmbientCapExceeded(SchubertError):
    pass


class UnstableFit(SchubertError):
    pass


class NotIntegerValued(SchubertError, ValueError):
    pass


class DegreeTooLarge(SchubertError, ValueError):
    pass


class ChecksumMismatch(SchubertError):
    pass


class CacheLocked(SchubertError):
    pass
