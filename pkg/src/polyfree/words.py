"""Words in a free group.

A word is a tuple of nonzero ints: ``k`` stands for the k-th generator
(1-based) and ``-k`` for its inverse.
"""
from __future__ import annotations

from typing import Iterable, Sequence

Word = tuple[int, ...]


class MalformedWordError(ValueError):
    pass


def check_word(w: Iterable[int], ngens: int | None = None) -> Word:
    w = tuple(w)
    for x in w:
        if not isinstance(x, int) or isinstance(x, bool) or x == 0:
            raise MalformedWordError(f"bad letter {x!r} in {w}")
        if ngens is not None and abs(x) > ngens:
            raise MalformedWordError(f"letter {x} out of range for {ngens} generators")
    return w


def free_reduce(w: Iterable[int], ngens: int | None = None) -> Word:
    out: list[int] = []
    for x in check_word(w, ngens):
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_reduce(w: Iterable[int]) -> Word:
    w = free_reduce(w)
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    return w[i:j + 1]


def inverse(w: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(w))


def multiply(*ws: Sequence[int]) -> Word:
    out: list[int] = []
    for w in ws:
        out.extend(w)
    return free_reduce(out)


def power(w: Sequence[int], n: int) -> Word:
    if n < 0:
        return free_reduce(inverse(w) * -n)
    return free_reduce(tuple(w) * n)


def commutator(u: Sequence[int], v: Sequence[int]) -> Word:
    return multiply(u, v, inverse(u), inverse(v))


def exponent_sum(w: Iterable[int], gen: int) -> int:
    return sum((1 if x > 0 else -1) for x in w if abs(x) == gen)


def cyclic_rotations(w: Word) -> list[Word]:
    return [w[i:] + w[:i] for i in range(len(w))] or [()]


def same_cyclic_class(u: Word, v: Word) -> bool:
    """True if ``u`` is a cyclic rotation of ``v`` or of ``v``'s inverse."""
    if len(u) != len(v):
        return False
    if not u:
        return True
    doubled = v + v
    inv = inverse(v)
    dinv = inv + inv
    n = len(u)
    return any(doubled[i:i + n] == u or dinv[i:i + n] == u for i in range(n))


def cyclic_class_key(w: Word) -> Word:
    """Least rotation of ``w`` or its inverse; equal keys iff :func:`same_cyclic_class`."""
    return min(cyclic_rotations(w) + cyclic_rotations(inverse(w)))


# -- text form: generator names, uppercase name for the inverse ------------

def _tokens(names: Sequence[str]) -> list[tuple[str, int]]:
    toks = [(name, i + 1) for i, name in enumerate(names)]
    toks += [(name.upper(), -(i + 1)) for i, name in enumerate(names)]
    # longest first so that "s10" wins over "s1"
    toks.sort(key=lambda t: -len(t[0]))
    return toks


def check_generator_names(names: Sequence[str]) -> None:
    if len(set(names)) != len(names):
        raise ValueError(f"generator names not distinct: {list(names)}")
    for name in names:
        if not name or name != name.lower() or name == name.upper():
            raise ValueError(f"generator name {name!r} must be lowercase with a letter")


def parse_word(text: str, names: Sequence[str]) -> Word:
    toks = _tokens(names)
    out = []
    pos = 0
    text = text.replace(" ", "")
    while pos < len(text):
        for tok, letter in toks:
            if text.startswith(tok, pos):
                out.append(letter)
                pos += len(tok)
                break
        else:
            raise MalformedWordError(f"cannot parse {text!r} at position {pos}")
    return tuple(out)


def format_word(w: Sequence[int], names: Sequence[str]) -> str:
    s = "".join(names[x - 1] if x > 0 else names[-x - 1].upper() for x in w)
    if parse_word(s, names) != tuple(w):
        raise ValueError(f"generator names {list(names)} make {s!r} ambiguous")
    return s
