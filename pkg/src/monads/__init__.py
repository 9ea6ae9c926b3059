"""
Monads on the base category and their Kleisli categories.
"""

from .monad_engine import (
    Monoid,
    cyclic_monoid,
    Monad,
    identity_monad,
    maybe_monad,
    writer_monad,
    reader_monad,
    list_monad,
    builtin,
    require_finiteness,
    bounded_elements,
    check_monad_laws,
    KleisliMorph,
    kleisli_identity,
    kleisli_from_morph,
    kleisli_compose,
    check_naturality
)
