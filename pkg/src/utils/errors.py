"""
Exception hierarchy for the T-simplicial toolkit.

Every error derives from TCatError, itself a ValueError, and carries a
message starting with "ERROR: ". Checks never raise for a failing axiom;
they return report tables with witnesses instead.
"""


class TCatError(ValueError):
    """Base class. `exit_code` is what the CLI returns for it."""

    exit_code = 1

    def __init__(self, message, witness=None):
        if not message.startswith("ERROR: "):
            message = f"ERROR: {message}"
        super().__init__(message)
        self.witness = witness


class DocumentError(TCatError):
    """Malformed input document (schema, JSON syntax, unresolved names)."""

    exit_code = 2


class MonoidError(DocumentError):
    """Monoid table that is not associative or not unital."""


class CapabilityError(TCatError):
    """Operation needs a materialized carrier the monad cannot provide."""

    exit_code = 3


class DomainError(TCatError):
    """Index out of range, type mismatch or element outside a domain."""


class AlgebraError(TCatError):
    """Action violating the Eilenberg-Moore laws."""


class ExtensionError(TCatError):
    """A pullback-induced lift has no element, or more than one."""


class DiagramError(TCatError):
    """A diagram expected to commute does not."""


class EnumerationLimitError(TCatError):
    """Enumeration would visit more candidates than allowed."""


class DepthError(TCatError):
    """Truncation depth too shallow for the requested construction."""
