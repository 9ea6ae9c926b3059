"""
Utility modules: configuration constants and the error hierarchy.
"""

from .errors import (
    TCatError,
    DocumentError,
    MonoidError,
    CapabilityError,
    DomainError,
    AlgebraError,
    ExtensionError,
    DiagramError,
    EnumerationLimitError,
    DepthError
)
