"""Exact sparse linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`.  Sparse vectors are plain dicts
mapping a hashable label to a nonzero Fraction; matrices are immutable
:class:`SparseRationalMatrix` objects.  Nothing here touches floating point.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, lcm
from typing import Hashable, Iterable, Mapping

ExactRational = Fraction

__all__ = [
    "ExactRational",
    "SparseRationalMatrix",
    "EchelonSubspace",
    "kernel_basis",
    "rank",
    "parse_rational",
    "format_rational",
    "vec_add",
    "vec_scale",
    "vec_axpy",
    "vec_clean",
]


_RATIONAL = re.compile(r"[+-]?[0-9]+(/[0-9]+)?")


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"p/q"``, ``"-3/2"`` or an integer string into a Fraction.

    Raises ValueError on anything else (floats are refused on purpose).
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str) or not _RATIONAL.fullmatch(text):
        raise ValueError(f"not an exact rational: {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError as exc:
        raise ValueError(f"not an exact rational: {text!r}") from exc


def format_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


# -- sparse vectors ---------------------------------------------------------

def vec_clean(v: dict) -> dict:
    return {k: c for k, c in v.items() if c}


def vec_axpy(acc: dict, coeff, v: Mapping) -> dict:
    """acc += coeff * v, in place; drops zeros.  Returns acc."""
    if not coeff:
        return acc
    for k, c in v.items():
        s = acc.get(k, 0) + coeff * c
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)
    return acc


def vec_add(*vs: Mapping) -> dict:
    out: dict = {}
    for v in vs:
        vec_axpy(out, 1, v)
    return out


def vec_scale(coeff, v: Mapping) -> dict:
    if not coeff:
        return {}
    return {k: coeff * c for k, c in v.items()}


# -- matrices ---------------------------------------------------------------

class SparseRationalMatrix:
    """Immutable sparse matrix with Fraction entries and no stored zeros."""

    __slots__ = ("_nrows", "_ncols", "_entries")

    def __init__(self, nrows: int, ncols: int,
                 entries: Mapping[tuple[int, int], object] | None = None):
        if nrows < 0 or ncols < 0:
            raise ValueError("negative dimension")
        clean = {}
        for (i, j), x in (entries or {}).items():
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise IndexError(f"entry ({i}, {j}) outside {nrows}x{ncols}")
            x = Fraction(x)
            if x:
                clean[(i, j)] = x
        self._nrows = nrows
        self._ncols = ncols
        self._entries = clean

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "SparseRationalMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols,
                   {(i, j): x for i, r in enumerate(rows) for j, x in enumerate(r)})

    @classmethod
    def identity(cls, n: int) -> "SparseRationalMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @property
    def shape(self) -> tuple[int, int]:
        return (self._nrows, self._ncols)

    @property
    def nrows(self) -> int:
        return self._nrows

    @property
    def ncols(self) -> int:
        return self._ncols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (0 <= i < self._nrows and 0 <= j < self._ncols):
            raise IndexError(ij)
        return self._entries.get((i, j), Fraction(0))

    def items(self):
        return self._entries.items()

    def nnz(self) -> int:
        return len(self._entries)

    def rows(self) -> list[dict[int, Fraction]]:
        out: list[dict[int, Fraction]] = [{} for _ in range(self._nrows)]
        for (i, j), x in self._entries.items():
            out[i][j] = x
        return out

    def to_lists(self) -> list[list[Fraction]]:
        return [[self[i, j] for j in range(self._ncols)] for i in range(self._nrows)]

    def transpose(self) -> "SparseRationalMatrix":
        return SparseRationalMatrix(self._ncols, self._nrows,
                                    {(j, i): x for (i, j), x in self._entries.items()})

    def is_symmetric(self) -> bool:
        if self._nrows != self._ncols:
            return False
        return all(self._entries.get((j, i)) == x for (i, j), x in self._entries.items())

    def apply(self, v: Mapping[int, object]) -> dict[int, Fraction]:
        """Matrix times a sparse column vector indexed by column number."""
        out: dict[int, Fraction] = {}
        for (i, j), x in self._entries.items():
            c = v.get(j)
            if c:
                out[i] = out.get(i, 0) + x * c
        return vec_clean(out)

    def __eq__(self, other):
        if not isinstance(other, SparseRationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self):
        return hash((self.shape, frozenset(self._entries.items())))

    def __repr__(self):
        return f"SparseRationalMatrix({self._nrows}x{self._ncols}, nnz={len(self._entries)})"


def _integer_rows(M: SparseRationalMatrix) -> list[dict[int, int]]:
    # scale each row by the lcm of its denominators, then divide by the content
    out = []
    for row in M.rows():
        if not row:
            continue
        den = lcm(*(x.denominator for x in row.values()))
        irow = {j: int(x * den) for j, x in row.items()}
        g = 0
        for x in irow.values():
            g = gcd(g, x)
        out.append({j: x // g for j, x in irow.items()})
    return out


def _exact_div(a: int, b: int) -> int:
    q, rem = divmod(a, b)
    if rem:
        raise ArithmeticError("inexact Bareiss step")
    return q


def _bareiss_echelon(rows: list[dict[int, int]], ncols: int):
    """Fraction-free (Bareiss) forward elimination on integer sparse rows.

    Returns (echelon_rows, pivot_columns); row k has its leading entry in
    pivot_columns[k].
    """
    rows = [dict(r) for r in rows if r]
    pivots: list[int] = []
    echelon: list[dict[int, int]] = []
    prev = 1
    for col in range(ncols):
        # pick the pivot with the fewest nonzeros to limit fill-in
        best = None
        for idx, r in enumerate(rows):
            if r.get(col):
                if best is None or len(r) < len(rows[best]):
                    best = idx
        if best is None:
            continue
        prow = rows.pop(best)
        p = prow[col]
        new_rows = []
        for r in rows:
            a = r.get(col)
            if not a:
                # keep the Bareiss invariant: every remaining row is scaled by p/prev
                r = {j: _exact_div(p * x, prev) for j, x in r.items()}
            else:
                keys = set(r) | set(prow)
                nr = {}
                for j in keys:
                    x = (p * r.get(j, 0) - a * prow.get(j, 0))
                    if x:
                        nr[j] = _exact_div(x, prev)
                r = nr
            if r:
                new_rows.append(r)
        rows = new_rows
        echelon.append(prow)
        pivots.append(col)
        prev = p
        if not rows:
            break
    return echelon, pivots


def rank(M: SparseRationalMatrix) -> int:
    """Rank over Q."""
    _, pivots = _bareiss_echelon(_integer_rows(M), M.ncols)
    return len(pivots)


def _reduced_echelon(M: SparseRationalMatrix):
    echelon, pivots = _bareiss_echelon(_integer_rows(M), M.ncols)
    # back substitution to reduced form, in Fractions
    red = [{j: Fraction(x, r[p]) for j, x in r.items()} for r, p in zip(echelon, pivots)]
    for k in range(len(red) - 1, -1, -1):
        pk = pivots[k]
        for i in range(k):
            a = red[i].get(pk)
            if a:
                vec_axpy(red[i], -a, red[k])
    return red, pivots


def kernel_basis(M: SparseRationalMatrix) -> list[dict[int, Fraction]]:
    """Basis of {v : M v = 0}, as sparse vectors indexed by column.

    One vector per free column, normalized to 1 at that column.
    """
    red, pivots = _reduced_echelon(M)
    pivot_set = set(pivots)
    basis = []
    for free in range(M.ncols):
        if free in pivot_set:
            continue
        v = {free: Fraction(1)}
        for r, p in zip(red, pivots):
            a = r.get(free)
            if a:
                v[p] = -a
        basis.append(v)
    return basis


class EchelonSubspace:
    """A subspace of a space with hashable basis labels, kept in reduced
    echelon form so that vectors can be put in normal form modulo it.

    ``order`` ranks labels; the pivot of a stored vector is its
    lowest-ranked label.
    """

    def __init__(self, order: Mapping[Hashable, int]):
        self._order = order
        self._rows: dict[Hashable, dict] = {}

    def __len__(self):
        return len(self._rows)

    @property
    def pivots(self) -> frozenset:
        return frozenset(self._rows)

    def reduce(self, v: Mapping) -> dict:
        # stored rows vanish on every other pivot, so one pass suffices
        out = dict(v)
        for lab in [k for k in out if k in self._rows]:
            c = out.get(lab)
            if c:
                vec_axpy(out, -c, self._rows[lab])
        return out

    def add(self, v: Mapping) -> bool:
        """Insert v; returns False if v was already in the span."""
        r = self.reduce(v)
        if not r:
            return False
        piv = min(r, key=self._order.__getitem__)
        inv = 1 / Fraction(r[piv])
        r = {k: c * inv for k, c in r.items()}
        for lab, row in self._rows.items():
            c = row.get(piv)
            if c:
                vec_axpy(row, -c, r)
        self._rows[piv] = r
        return True

    def contains(self, v: Mapping) -> bool:
        return not self.reduce(v)
