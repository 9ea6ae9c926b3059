"""
Command-line front end: documents, reports and the tsimplicial command.
"""

from .documents import (
    Workspace,
    parse_monad,
    parse_monoid,
    decode_value,
    encode_value,
    parse_document,
    load_document,
    apply_mutations,
    canonical_document,
    serialize,
    dumps
)
from .reports import (
    Report,
    render_text,
    to_json,
    to_excel
)
