"""JSON encoding of exact numbers.

Integers within the signed 64-bit range are emitted as JSON numbers, larger
ones as decimal strings; rationals are always ``"p/q"`` strings (or plain
integers when the denominator is one).
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .errors import InputError

_INT64 = 2**63
_NUMBER = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*")


def encode_number(v):
    if isinstance(v, Fraction):
        if v.denominator == 1:
            v = int(v.numerator)
        else:
            return f"{v.numerator}/{v.denominator}"
    if isinstance(v, int) and not isinstance(v, bool):
        return v if -_INT64 <= v < _INT64 else str(v)
    raise TypeError(f"not an exact number: {v!r}")


def decode_number(v, allow_fraction: bool = True):
    """Parse an int, an integer string, or (if allowed) a ``"p/q"`` string."""
    if isinstance(v, bool):
        raise InputError(f"expected a number, got {v!r}")
    if isinstance(v, int):
        return v
    if isinstance(v, float):
        if v.is_integer():
            return int(v)
        raise InputError(f"floating point value {v!r} is not exact; use a 'p/q' string")
    if isinstance(v, str):
        match = _NUMBER.fullmatch(v)
        if not match or match.group(2) is not None and int(match.group(2)) == 0:
            raise InputError(f"cannot parse number {v!r}; expected an integer or 'p/q'")
        q = Fraction(int(match.group(1)), int(match.group(2) or 1))
        if q.denominator == 1:
            return int(q.numerator)
        if not allow_fraction:
            raise InputError(f"expected an integer, got {v!r}")
        return q
    raise InputError(f"expected a number, got {v!r}")


def dumps(obj) -> str:
    """Deterministic JSON text (sorted keys are *not* used; insertion order is canonical)."""
    return json.dumps(obj, indent=2, ensure_ascii=False)
