"""Exception hierarchy shared by all repkit modules."""

from __future__ import annotations


class RepkitError(Exception):
    """Base class for domain failures (CLI exit code 1)."""


class FieldError(RepkitError):
    pass


class DimensionError(RepkitError):
    pass


class NotARootError(RepkitError):
    pass


class GroupAxiomError(RepkitError):
    """A Cayley table failed a group axiom.

    ``axiom`` is a short tag (``identity``, ``associativity``, ``row_permutation``,
    ``column_permutation``, ``inverse``, ``shape``) and ``witness`` a tuple of
    element indices exhibiting the failure.
    """

    def __init__(self, axiom: str, message: str, witness: tuple = ()):
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness


class SubgroupError(RepkitError):
    pass


class HomomorphismError(RepkitError):
    def __init__(self, message: str, witness: tuple = ()):
        super().__init__(message)
        self.witness = witness


class RepresentationError(RepkitError):
    def __init__(self, message: str, witness: tuple = ()):
        super().__init__(message)
        self.witness = witness


class NotInvariantError(RepkitError):
    def __init__(self, message: str, witness: int | None = None):
        super().__init__(message)
        self.witness = witness


class ModularObstruction(RepkitError):
    """Raised when |G| is zero in the field, so averaging over G is impossible."""


class DegeneratePairingError(RepkitError):
    pass


class ParseError(Exception):
    """Malformed input document (CLI exit code 2)."""
