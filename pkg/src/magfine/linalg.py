"""Exact sparse linear algebra over Q.

Rows are eliminated fraction-free: every row is kept as a primitive integer
vector (content divided out), so no rational arithmetic happens until the
final normalisation to reduced row echelon form.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence


def _integer_row(row: Mapping[int, Fraction | int]) -> dict[int, int]:
    row = {c: Fraction(v) for c, v in row.items() if v != 0}
    if not row:
        return {}
    den = lcm(*(v.denominator for v in row.values()))
    ints = {c: int(v * den) for c, v in row.items()}
    return _primitive(ints)


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        row = {c: v // g for c, v in row.items()}
    # Positive leading entry makes the echelon rows deterministic.
    lead = min(row)
    if row[lead] < 0:
        row = {c: -v for c, v in row.items()}
    return row


def _eliminate(row: dict[int, int], pivot_row: dict[int, int], col: int) -> dict[int, int]:
    p = pivot_row[col]
    a = row[col]
    g = gcd(p, a)
    p, a = p // g, a // g
    out = {c: p * v for c, v in row.items()}
    for c, v in pivot_row.items():
        nv = out.get(c, 0) - a * v
        if nv:
            out[c] = nv
        else:
            out.pop(c, None)
    return _primitive(out) if out else out


@dataclass
class ExactMatrix:
    """Sparse matrix of exact rationals, stored by rows."""

    nrows: int
    ncols: int
    rows: list[dict[int, Fraction]] = field(default_factory=list)

    def __post_init__(self):
        if not self.rows:
            self.rows = [{} for _ in range(self.nrows)]
        if len(self.rows) != self.nrows:
            raise ValueError("row count mismatch")
        for r in self.rows:
            for c in r:
                if not 0 <= c < self.ncols:
                    raise IndexError(f"column {c} out of range")

    @classmethod
    def from_dense(cls, data: Sequence[Sequence]) -> ExactMatrix:
        nrows = len(data)
        ncols = len(data[0]) if nrows else 0
        rows = [{j: Fraction(v) for j, v in enumerate(r) if v != 0} for r in data]
        return cls(nrows, ncols, rows)

    @classmethod
    def from_columns(cls, nrows: int, columns: Sequence[Mapping[int, Fraction | int]]) -> ExactMatrix:
        rows: list[dict[int, Fraction]] = [{} for _ in range(nrows)]
        for j, col in enumerate(columns):
            for i, v in col.items():
                if v != 0:
                    rows[i][j] = Fraction(v)
        return cls(nrows, len(columns), rows)

    @classmethod
    def from_vectors(cls, ncols: int, vectors: Iterable[Mapping[int, Fraction | int]]) -> ExactMatrix:
        """Matrix whose rows are the given sparse vectors."""
        rows = [{c: Fraction(v) for c, v in vec.items() if v != 0} for vec in vectors]
        return cls(len(rows), ncols, rows)

    def to_dense(self) -> list[list[Fraction]]:
        return [[r.get(j, Fraction(0)) for j in range(self.ncols)] for r in self.rows]

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows)

    def echelon(self) -> dict[int, dict[int, int]]:
        """Primitive integer echelon rows keyed by pivot column."""
        pivots: dict[int, dict[int, int]] = {}
        for raw in self.rows:
            row = _integer_row(raw)
            while row:
                hit = [c for c in row if c in pivots]
                if not hit:
                    break
                col = min(hit)
                row = _eliminate(row, pivots[col], col)
            if row:
                pivots[min(row)] = row
        return pivots

    def rank(self) -> int:
        return len(self.echelon())

    def rref(self) -> tuple[list[int], list[dict[int, Fraction]]]:
        """Reduced row echelon form: (pivot columns ascending, rows with leading 1)."""
        pivots = self.echelon()
        order = sorted(pivots)
        # Clear every pivot column from the other rows, last pivot first.
        for col in reversed(order):
            prow = pivots[col]
            for other in order:
                if other != col and col in pivots[other]:
                    pivots[other] = _eliminate(pivots[other], prow, col)
        reduced = []
        for col in order:
            row = pivots[col]
            lead = row[col]
            reduced.append({c: Fraction(v, lead) for c, v in row.items()})
        return order, reduced

    def nullspace(self) -> list[dict[int, Fraction]]:
        """Kernel basis, one vector per free column with a 1 there, in column order."""
        order, reduced = self.rref()
        pivot_set = set(order)
        basis = []
        for free in range(self.ncols):
            if free in pivot_set:
                continue
            vec = {free: Fraction(1)}
            for col, row in zip(order, reduced):
                v = row.get(free)
                if v:
                    vec[col] = -v
            basis.append(vec)
        return basis

    def apply(self, vec: Mapping[int, Fraction]) -> dict[int, Fraction]:
        """Matrix-vector product with a sparse vector."""
        out = {}
        for i, r in enumerate(self.rows):
            s = sum((v * vec[c] for c, v in r.items() if c in vec), Fraction(0))
            if s:
                out[i] = s
        return out


def rank_of_vectors(ncols: int, vectors: Iterable[Mapping[int, Fraction | int]]) -> int:
    return ExactMatrix.from_vectors(ncols, vectors).rank()
