"""Exact rank and linear solves over the rationals.

Rows are sparse maps ``column -> value``. Values stay Python ints while they
are integral and become :class:`~fractions.Fraction` only when a division
forces it, so there is no rounding anywhere.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence


def _norm(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return v.numerator
    return v


def _bits(v) -> int:
    if isinstance(v, int):
        return abs(v).bit_length()
    return v.numerator.bit_length() + v.denominator.bit_length()


class ReducedEchelon:
    """Incremental reduced row echelon form.

    Every stored pivot row has a 1 in its pivot column and a 0 in every other
    pivot column, so reducing a new row takes a single pass. The pivot is the
    entry of least bit-length, then the column appearing in fewest stored
    rows, then the smallest column; this choice is deterministic.
    """

    def __init__(self):
        self._pivots: dict = {}
        self._occ: dict = {}  # non-pivot column -> pivot columns whose rows use it

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def reduce(self, row: Mapping) -> dict:
        r = {k: _norm(Fraction(v)) for k, v in row.items() if v}
        pivots = self._pivots
        for c in [c for c in r if c in pivots]:
            f = r.get(c)
            if not f:
                continue
            for k, v in pivots[c].items():
                nv = r.get(k, 0) - f * v
                if nv:
                    r[k] = _norm(nv)
                else:
                    r.pop(k, None)
        return r

    def add(self, row: Mapping) -> bool:
        """Insert a row; return True iff it was independent of the rows so far."""
        r = self.reduce(row)
        if not r:
            return False
        occ = self._occ
        p = min(r, key=lambda c: (_bits(r[c]), len(occ.get(c, ())), c))
        a = r[p]
        if a != 1:
            inv = a if a == -1 else Fraction(1) / a
            r = {k: _norm(v * inv) for k, v in r.items()}
        for q in list(occ.pop(p, ())):
            prow = self._pivots[q]
            f = prow.pop(p)
            for k, v in r.items():
                if k == p:
                    continue
                nv = prow.get(k, 0) - f * v
                if nv:
                    if k not in prow:
                        occ.setdefault(k, set()).add(q)
                    prow[k] = _norm(nv)
                else:
                    prow.pop(k, None)
                    occ[k].discard(q)
        for k in r:
            if k != p:
                occ.setdefault(k, set()).add(p)
        self._pivots[p] = r
        return True


def rank(rows: Iterable[Mapping], *, full: int | None = None) -> int:
    """Rank of a family of sparse rows; stops early once ``full`` is reached."""
    ech = ReducedEchelon()
    for row in rows:
        ech.add(row)
        if full is not None and ech.rank >= full:
            break
    return ech.rank


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    """Solve a square nonsingular system exactly by Gauss-Jordan elimination."""
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("singular system")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n] for row in aug]
