import itertools
import random

import pytest

from polyfree.presentation import Presentation


def stack_reduce(w):
    """Reference free reduction: one explicit stack pass, written independently."""
    stack = []
    for x in w:
        if stack and stack[-1] + x == 0:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def random_word(rng, ngens, length):
    return tuple(rng.choice([1, -1]) * rng.randint(1, ngens) for _ in range(length))


def random_presentation(rng, max_gens=3, max_rels=3, max_len=6):
    n = rng.randint(1, max_gens)
    rels = [random_word(rng, n, rng.randint(1, max_len)) for _ in range(rng.randint(0, max_rels))]
    return Presentation(tuple("abc"[:n]), tuple(rels))


@pytest.fixture
def rng():
    return random.Random(20201005)


def perm_mul(p, q):
    """Apply p then q."""
    return tuple(q[p[i]] for i in range(len(p)))


def perm_closure(gens):
    ident = tuple(range(len(gens[0])))
    elems = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                f = perm_mul(e, g)
                if f not in elems:
                    elems.add(f)
                    nxt.append(f)
        frontier = nxt
    return elems


def perm_of_word(w, gens):
    e = tuple(range(len(gens[0])))
    for x in w:
        g = gens[abs(x) - 1]
        if x < 0:
            inv = [0] * len(g)
            for i, j in enumerate(g):
                inv[j] = i
            g = tuple(inv)
        e = perm_mul(e, g)
    return e


def brute_force_coset_action(gens, sub_words):
    """Right action of the generators on right cosets Hg, by explicit set arithmetic.

    Returns the table standardized breadth-first from the coset H, with
    columns g1, g1^-1, g2, ... exactly like the coset tables under test.
    """
    elements = perm_closure(gens)
    h_gens = [perm_of_word(w, gens) for w in sub_words] or [tuple(range(len(gens[0])))]
    H = perm_closure(h_gens)
    cosets = {}
    for g in elements:
        key = frozenset(perm_mul(h, g) for h in H)
        cosets.setdefault(key, g)
    inverses = []
    for g in gens:
        inv = [0] * len(g)
        for i, j in enumerate(g):
            inv[j] = i
        inverses.append(tuple(inv))
    cols = [x for pair in zip(gens, inverses) for x in pair]
    start = frozenset(H)
    num = {start: 0}
    order = [start]
    rows = []
    for c in order:
        rep = cosets[c]
        row = []
        for g in cols:
            img = frozenset(perm_mul(h, perm_mul(rep, g)) for h in H)
            if img not in num:
                num[img] = len(order)
                order.append(img)
            row.append(num[img])
        rows.append(tuple(row))
    return len(elements), tuple(rows)


# finite groups given both by a presentation and by faithful permutation generators
FINITE_GROUPS = {
    "Z3": (Presentation(("a",), ((1, 1, 1),)), [(1, 2, 0)]),
    "Z6": (Presentation(("a",), ((1,) * 6,)), [(1, 2, 3, 4, 5, 0)]),
    "V4": (
        Presentation(("a", "b"), ((1, 1), (2, 2), (1, 2, -1, -2))),
        [(1, 0, 3, 2), (2, 3, 0, 1)],
    ),
    "S3": (Presentation(("a", "b"), ((1, 1), (2, 2), (1, 2) * 3)), [(1, 0, 2), (0, 2, 1)]),
    "D4": (Presentation(("a", "b"), ((1, 1), (2, 2), (1, 2) * 4)), [(1, 0, 3, 2), (0, 3, 2, 1)]),
    "Q8": (
        Presentation(("i", "j"), ((1, 1, 1, 1), (1, 1, -2, -2), (-2, 1, 2, 1))),
        # regular representation of Q8 on {±1, ±i, ±j, ±k}
        None,
    ),
    "A4": (
        Presentation(("a", "b"), ((1, 1), (2, 2, 2), (1, 2) * 3)),
        [(1, 0, 3, 2), (0, 2, 3, 1)],
    ),
    "D6": (Presentation(("a", "b"), ((1, 1), (2, 2), (1, 2) * 6)), [(1, 0, 5, 4, 3, 2), (0, 5, 4, 3, 2, 1)]),
    "S4": (
        Presentation(
            ("a", "b", "c"),
            ((1, 1), (2, 2), (3, 3), (1, 2) * 3, (2, 3) * 3, (1, 3) * 2),
        ),
        [(1, 0, 2, 3), (0, 2, 1, 3), (0, 1, 3, 2)],
    ),
}


def _q8_perms():
    # quaternion units as (sign, basis) with basis 0=1,1=i,2=j,3=k
    table = {(1, 1): (-1, 0), (2, 2): (-1, 0), (3, 3): (-1, 0),
             (1, 2): (1, 3), (2, 3): (1, 1), (3, 1): (1, 2),
             (2, 1): (-1, 3), (3, 2): (-1, 1), (1, 3): (-1, 2)}

    def mul(x, y):
        (s, a), (t, b) = x, y
        if a == 0:
            return (s * t, b)
        if b == 0:
            return (s * t, a)
        u, c = table[(a, b)]
        return (s * t * u, c)

    elems = [(s, a) for a in range(4) for s in (1, -1)]
    idx = {e: n for n, e in enumerate(elems)}
    return [tuple(idx[mul(e, g)] for e in elems) for g in ((1, 1), (1, 2))]


FINITE_GROUPS["Q8"] = (FINITE_GROUPS["Q8"][0], _q8_perms())
ORDERS = {"Z3": 3, "Z6": 6, "V4": 4, "S3": 6, "D4": 8, "Q8": 8, "A4": 12, "D6": 12, "S4": 24}


def all_short_words(ngens, max_len):
    letters = [x for g in range(1, ngens + 1) for x in (g, -g)]
    for n in range(1, max_len + 1):
        yield from itertools.product(letters, repeat=n)
