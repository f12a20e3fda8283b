"""Relation checks, homology and prolongations of vectorial Lie superalgebras."""

import os
from pathlib import Path

_data = Path(__file__).with_name("data")
if _data.is_dir():
    os.environ.setdefault("SUPERLIE_DATA", str(_data))

from ._vsa import VsaError, algebras, data_dir, h2, negative_dims, prolong, verify  # noqa: E402

__all__ = ["VsaError", "algebras", "data_dir", "h2", "negative_dims", "prolong", "verify"]
