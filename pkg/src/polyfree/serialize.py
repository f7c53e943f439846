"""Canonical JSON: sorted keys, integers and strings only, rationals as "p/q"."""
from __future__ import annotations

import json
from fractions import Fraction


class SerializationError(ValueError):
    pass


def _reject_float(text):
    raise SerializationError(f"floating point value {text} is not allowed")


def dumps(obj) -> str:
    _check(obj)
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads(text: str):
    try:
        return json.loads(text, parse_float=_reject_float, parse_constant=_reject_float)
    except json.JSONDecodeError as e:
        raise SerializationError(f"malformed JSON at line {e.lineno} column {e.colno}: {e.msg}") from e


def _check(obj):
    if isinstance(obj, float):
        raise SerializationError(f"refusing to write float {obj!r}")
    if isinstance(obj, dict):
        for v in obj.values():
            _check(v)
    elif isinstance(obj, (list, tuple)):
        for v in obj:
            _check(v)


def rational_str(x: Fraction) -> str:
    return str(Fraction(x))


def parse_rational(s) -> Fraction:
    if not isinstance(s, str):
        raise SerializationError(f"rational must be a 'p/q' string, got {s!r}")
    try:
        return Fraction(s)
    except ValueError as e:
        raise SerializationError(f"bad rational {s!r}") from e


def require_int(d: dict, key: str) -> int:
    v = d.get(key)
    if not isinstance(v, int) or isinstance(v, bool):
        raise SerializationError(f"field {key!r} must be an integer, got {v!r}")
    return v
