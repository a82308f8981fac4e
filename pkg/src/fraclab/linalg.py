"""Exact rational linear algebra.

Elimination is fraction-free (Bareiss): every stored entry is an integer minor
of the input and each update divides exactly by the previous pivot. Rows are
sparse dicts, and a row whose entry in the pivot column is already zero is
not rewritten; its Bareiss update is a pure rescaling, which is recorded in a
per-row factor and applied the next time the row is touched.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Sequence

from fraclab.errors import InvalidInput, SingularMatrix


@dataclass(frozen=True)
class RationalMatrix:
    """Square matrix of Fractions with a key per row/column position."""

    rows: tuple[tuple[Fraction, ...], ...]
    keys: tuple[Hashable, ...]

    def __post_init__(self):
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise InvalidInput("matrix is not square")
        if len(self.keys) != n:
            raise InvalidInput("index map size does not match the matrix")
        if len(set(self.keys)) != n:
            raise InvalidInput("index map is not injective")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], keys: Sequence[Hashable] | None = None) -> "RationalMatrix":
        fr = tuple(tuple(Fraction(x) for x in r) for r in rows)
        return cls(fr, tuple(range(len(fr))) if keys is None else tuple(keys))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def position(self, key) -> int:
        return self._index[key]

    @property
    def _index(self) -> dict:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {k: i for i, k in enumerate(self.keys)}
            object.__setattr__(self, "_idx", idx)
        return idx

    def __getitem__(self, pair) -> Fraction:
        a, b = pair
        return self.rows[self._index[a]][self._index[b]]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(tuple(zip(*self.rows)) if self.rows else (), self.keys)

    def to_text(self) -> str:
        return "".join(
            " ".join(f"{x.numerator}/{x.denominator}" for x in row) + "\n" for row in self.rows
        )


def _integer_rows(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction] | None):
    """Scale each row (with its rhs entry) to integers; returns sparse rows and scales."""
    n = len(rows)
    out, scales = [], []
    for i, row in enumerate(rows):
        vals = [Fraction(x) for x in row]
        if rhs is not None:
            vals.append(Fraction(rhs[i]))
        lcm = 1
        for x in vals:
            lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
        sparse = {}
        for j, x in enumerate(vals):
            if x:
                sparse[j] = int(x * lcm)
        out.append(sparse)
        scales.append(lcm)
    return out, scales


def _bareiss(rows: list[dict[int, int]], n: int):
    """Forward elimination on columns 0..n-1 in place.

    Returns (pivot_rows, last_pivot, rank); pivot_rows[k] is the row index used
    for column k (None when the column has no pivot).
    """
    scale = [Fraction(1)] * len(rows)
    active = set(range(len(rows)))
    pivots: list[int | None] = []
    prev = 1
    last = 1

    def materialise(i: int) -> dict[int, int]:
        s = scale[i]
        if s != 1:
            row = {}
            for c, v in rows[i].items():
                x = v * s
                assert x.denominator == 1, "Bareiss invariant broken"
                row[c] = int(x)
            rows[i] = row
            scale[i] = Fraction(1)
        return rows[i]

    for k in range(n):
        cand = [i for i in active if k in rows[i]]
        if not cand:
            pivots.append(None)
            continue
        p = min(cand, key=lambda i: (len(rows[i]), i))
        prow = materialise(p)
        piv = prow[k]
        active.discard(p)
        tail = [(c, v) for c, v in prow.items() if c > k]
        for i in active:
            row = rows[i]
            if k not in row:
                scale[i] *= Fraction(piv, prev)
                continue
            row = materialise(i)
            a = row.pop(k)
            new = {}
            for c, v in row.items():
                new[c] = piv * v
            for c, v in tail:
                new[c] = new.get(c, 0) - a * v
            rows[i] = {c: v // prev for c, v in new.items() if v}
        pivots.append(p)
        prev = piv
        last = piv
    for i in active:
        materialise(i)
    rank = sum(p is not None for p in pivots)
    return pivots, last, rank


def _permutation_sign(perm: list[int]) -> int:
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def determinant(matrix: RationalMatrix) -> Fraction:
    n = matrix.dim
    if n == 0:
        return Fraction(1)
    rows, scales = _integer_rows(matrix.rows, None)
    pivots, last, rank = _bareiss(rows, n)
    if rank < n:
        return Fraction(0)
    det = Fraction(_permutation_sign(pivots) * last)
    for s in scales:
        det /= s
    return det


def solve_exact(matrix: RationalMatrix, rhs: Sequence) -> list[Fraction]:
    """Solve ``matrix @ x = rhs`` exactly.

    Raises :class:`SingularMatrix` with ``kind`` 'inconsistent' (no solution)
    or 'underdetermined' (infinitely many).
    """
    n = matrix.dim
    if len(rhs) != n:
        raise InvalidInput(f"rhs has length {len(rhs)}, matrix has dimension {n}")
    rows, _ = _integer_rows(matrix.rows, rhs)
    pivots, _, rank = _bareiss(rows, n)
    if rank < n:
        pivot_set = {p for p in pivots if p is not None}
        inconsistent = any(
            n in rows[i] and all(c == n for c in rows[i]) for i in range(n) if i not in pivot_set
        )
        raise SingularMatrix("inconsistent" if inconsistent else "underdetermined", rank, n)
    x = [Fraction(0)] * n
    for k in range(n - 1, -1, -1):
        row = rows[pivots[k]]
        acc = Fraction(row.get(n, 0))
        for c, v in row.items():
            if k < c < n:
                acc -= v * x[c]
        x[k] = acc / row[k]
    return x
