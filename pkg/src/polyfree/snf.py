"""Smith normal form over the integers and abelian invariants."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .presentation import Presentation, relation_matrix

IntMatrix = list[list[int]]


def smith_normal_form(m: Sequence[Sequence[int]], ncols: int | None = None) -> list[int]:
    """Nonzero invariant factors d_1 | d_2 | ... | d_r of an integer matrix.

    ``r`` is the rank. ``ncols`` is only needed for a matrix with no rows.
    """
    a = [list(map(int, row)) for row in m]
    rows = len(a)
    cols = len(a[0]) if a else (ncols or 0)
    if any(len(row) != cols for row in a):
        raise ValueError("matrix is not rectangular")
    diag = []
    t = 0
    while t < rows and t < cols:
        # pivot: smallest nonzero absolute value in the remaining block
        piv = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        i, j = piv
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            done = True
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    done = False
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    done = False
            if done:
                # divisibility: fold any entry not divisible by the pivot into row t
                bad = next(
                    (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad])]
                continue
            # a remainder is now smaller than the pivot; move it into place
            best = min(
                [(abs(a[i][t]), i, t) for i in range(t, rows) if a[i][t]]
                + [(abs(a[t][j]), t, j) for j in range(t, cols) if a[t][j]]
            )
            _, i, j = best
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


@dataclass(frozen=True)
class AbelianInvariants:
    free_rank: int
    torsion: tuple[int, ...]

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " x ".join(parts) if parts else "1"


def abelian_invariants(m: Sequence[Sequence[int]], ngens: int) -> AbelianInvariants:
    diag = smith_normal_form(m, ngens)
    return AbelianInvariants(ngens - len(diag), tuple(d for d in diag if d != 1))


def abelianization(p: Presentation) -> AbelianInvariants:
    return abelian_invariants(relation_matrix(p), p.ngens)
