"""Word maps on SL(2) and PSL(2) over the complex numbers."""

import json

from ._core import (
    InapplicableError,
    VerificationError,
    WordParseError,
    derived_level,
    exponent_sums,
    ff_image,
    minus_id,
    normalize,
    trace_polys,
    verify_paper,
)
from . import _core


def analyze(word, generators=2, big=(), ff=False, prime=5):
    """Full report as a dict (same fields as the CLI's --json output)."""
    return json.loads(_core.analyze_json(word, generators, [str(a) for a in big], ff, prime))


def big_slice(word, a):
    return json.loads(_core.big_slice_json(word, str(a)))


__all__ = [
    "InapplicableError",
    "VerificationError",
    "WordParseError",
    "analyze",
    "big_slice",
    "derived_level",
    "exponent_sums",
    "ff_image",
    "minus_id",
    "normalize",
    "trace_polys",
    "verify_paper",
]
