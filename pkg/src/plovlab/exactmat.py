"""Exact sparse rational matrices with deterministic rank and nullspace.

Elimination is fraction-free: rows are cleared to integers up front, pivoting
uses the first nonzero in the leftmost unresolved column with ties broken by
fewest nonzeros, and every updated row is divided by the gcd of its entries to
keep growth under control.  Everything is exact; no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

__all__ = ["ExactMatrix", "SparseMultiPoly", "matrix_rank", "nullspace_basis"]

Entry = tuple[int, Fraction]


@dataclass(frozen=True)
class ExactMatrix:
    """Sparse matrix of rationals; rows hold (col, value) pairs with strictly
    increasing column indices and no explicit zeros.  Degenerate 0 x m and
    m x 0 shapes are legal."""

    nrows: int
    ncols: int
    rows: tuple[tuple[Entry, ...], ...] = field(repr=False)

    def __post_init__(self):
        if self.nrows < 0 or self.ncols < 0:
            raise ValueError("negative shape")
        if len(self.rows) != self.nrows:
            raise ValueError("row count mismatch")

    @staticmethod
    def from_rows(nrows: int, ncols: int, row_dicts) -> "ExactMatrix":
        """Build from an iterable of {col: value} dicts (zeros dropped)."""
        rows = []
        for rd in row_dicts:
            row = tuple(
                (c, Fraction(v)) for c, v in sorted(rd.items()) if v != 0
            )
            if row and (row[0][0] < 0 or row[-1][0] >= ncols):
                raise ValueError("column index out of range")
            rows.append(row)
        return ExactMatrix(nrows, ncols, tuple(rows))

    @staticmethod
    def from_dense(data) -> "ExactMatrix":
        data = [list(r) for r in data]
        nrows = len(data)
        ncols = len(data[0]) if nrows else 0
        return ExactMatrix.from_rows(
            nrows, ncols, ({j: v for j, v in enumerate(r)} for r in data)
        )

    def entry(self, i: int, j: int) -> Fraction:
        for c, v in self.rows[i]:
            if c == j:
                return v
            if c > j:
                break
        return Fraction(0)

    def to_dense(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for i, row in enumerate(self.rows):
            for c, v in row:
                out[i][c] = v
        return out

    def matvec(self, x) -> list[Fraction]:
        if len(x) != self.ncols:
            raise ValueError("dimension mismatch")
        return [sum((v * x[c] for c, v in row), Fraction(0)) for row in self.rows]

    def submatrix_columns(self, cols: list[int]) -> "ExactMatrix":
        """Keep the given columns (in the given order), renumbering from 0."""
        remap = {c: j for j, c in enumerate(cols)}
        rows = []
        for row in self.rows:
            rows.append({remap[c]: v for c, v in row if c in remap})
        return ExactMatrix.from_rows(self.nrows, len(cols), rows)


def assemble_block_lower(a: ExactMatrix, b: ExactMatrix, c: ExactMatrix) -> ExactMatrix:
    """M = [[A, 0], [B, C]]; shapes must compose."""
    if a.ncols != b.ncols or b.nrows != c.nrows:
        raise ValueError("block shapes do not compose")
    n1 = a.ncols
    rows = []
    for row in a.rows:
        rows.append(dict(row))
    for rb, rc in zip(b.rows, c.rows):
        d = dict(rb)
        for col, v in rc:
            d[col + n1] = v
        rows.append(d)
    return ExactMatrix.from_rows(a.nrows + b.nrows, n1 + c.ncols, rows)


def hstack(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    if a.nrows != b.nrows:
        raise ValueError("row count mismatch")
    rows = []
    for ra, rb in zip(a.rows, b.rows):
        d = dict(ra)
        for col, v in rb:
            d[col + a.ncols] = v
        rows.append(d)
    return ExactMatrix.from_rows(a.nrows, a.ncols + b.ncols, rows)


def _integer_rows(m: ExactMatrix) -> list[dict[int, int]]:
    """Clear denominators row by row (row scaling preserves rank and kernel)."""
    out = []
    for row in m.rows:
        if not row:
            continue
        mult = lcm(*(v.denominator for _, v in row)) if row else 1
        out.append({c: int(v * mult) for c, v in row})
    return out


def _row_reduce(m: ExactMatrix) -> list[tuple[int, dict[int, int]]]:
    """Fraction-free elimination on integer-cleared rows.

    Rows are bucketed by leading column; at each column the pivot is the row
    with the fewest nonzeros (ties by arrival order), and every other row
    with that leading column is eliminated and re-bucketed.  Updated rows are
    divided by their entry gcd.  Returns pivots as (col, row_dict) in
    increasing column order.
    """
    buckets: dict[int, list[tuple[int, int, dict[int, int]]]] = {}
    seq = 0

    def insert(row: dict[int, int]):
        nonlocal seq
        lead = min(row)
        buckets.setdefault(lead, []).append((len(row), seq, row))
        seq += 1

    for row in _integer_rows(m):
        insert(row)

    pivots: list[tuple[int, dict[int, int]]] = []
    for col in range(m.ncols):
        group = buckets.pop(col, None)
        if not group:
            continue
        group.sort(key=lambda t: (t[0], t[1]))
        piv = group[0][2]
        p = piv[col]
        pivots.append((col, piv))
        for _, _, r in group[1:]:
            q = r[col]
            new: dict[int, int] = {}
            for c, v in r.items():
                if c != col:
                    new[c] = p * v
            for c, v in piv.items():
                if c == col:
                    continue
                w = new.get(c, 0) - q * v
                if w:
                    new[c] = w
                else:
                    new.pop(c, None)
            if new:
                g = 0
                for v in new.values():
                    g = gcd(g, v)
                if g > 1:
                    new = {c: v // g for c, v in new.items()}
                insert(new)
    return pivots


def matrix_rank(m: ExactMatrix) -> int:
    """Exact rank over the rationals; deterministic."""
    return len(_row_reduce(m))


def nullspace_basis(m: ExactMatrix) -> list[list[Fraction]]:
    """Deterministic kernel basis.

    One vector per free column, free columns in increasing order; each vector
    is scaled to coprime integer entries with first nonzero entry positive.
    Degenerate shapes: an m x 0 matrix has an empty nullspace; a 0 x m matrix
    has the full space (identity-style basis).
    """
    pivots = _row_reduce(m)
    pivot_cols = [c for c, _ in pivots]
    pivot_set = set(pivot_cols)
    free_cols = [c for c in range(m.ncols) if c not in pivot_set]
    basis = []
    for f in free_cols:
        x = [Fraction(0)] * m.ncols
        x[f] = Fraction(1)
        # back-substitute pivot variables in reverse pivot order
        for c, row in reversed(pivots):
            s = sum((Fraction(v) * x[j] for j, v in row.items() if j != c), Fraction(0))
            x[c] = -s / row[c]
        basis.append(_normalize(x))
    return basis


def _normalize(x: list[Fraction]) -> list[Fraction]:
    mult = lcm(*(v.denominator for v in x)) if x else 1
    ints = [int(v * mult) for v in x]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    first = next((v for v in ints if v), 0)
    if first < 0:
        ints = [-v for v in ints]
    return [Fraction(v) for v in ints]


@dataclass(frozen=True)
class SparseMultiPoly:
    """Multivariate polynomial with fixed arity: {exponent tuple: coefficient}."""

    arity: int
    terms: dict[tuple[int, ...], Fraction] = field(repr=False)

    @staticmethod
    def from_terms(arity: int, terms) -> "SparseMultiPoly":
        clean = {}
        for expo, coef in dict(terms).items():
            coef = Fraction(coef)
            if coef == 0:
                continue
            if len(expo) != arity or any(e < 0 for e in expo):
                raise ValueError(f"bad exponent vector {expo} for arity {arity}")
            clean[tuple(expo)] = coef
        return SparseMultiPoly(arity, clean)

    @staticmethod
    def zero(arity: int) -> "SparseMultiPoly":
        return SparseMultiPoly(arity, {})

    @staticmethod
    def constant(arity: int, c) -> "SparseMultiPoly":
        return SparseMultiPoly.from_terms(arity, {(0,) * arity: c})

    @staticmethod
    def variable(arity: int, i: int) -> "SparseMultiPoly":
        expo = [0] * arity
        expo[i] = 1
        return SparseMultiPoly.from_terms(arity, {tuple(expo): 1})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SparseMultiPoly)
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def __add__(self, other: "SparseMultiPoly") -> "SparseMultiPoly":
        self._check(other)
        out = dict(self.terms)
        for expo, c in other.terms.items():
            s = out.get(expo, Fraction(0)) + c
            if s:
                out[expo] = s
            else:
                out.pop(expo, None)
        return SparseMultiPoly(self.arity, out)

    def __sub__(self, other: "SparseMultiPoly") -> "SparseMultiPoly":
        return self + other.scale(-1)

    def scale(self, c) -> "SparseMultiPoly":
        c = Fraction(c)
        if c == 0:
            return SparseMultiPoly.zero(self.arity)
        return SparseMultiPoly(self.arity, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other: "SparseMultiPoly") -> "SparseMultiPoly":
        self._check(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return SparseMultiPoly(self.arity, out)

    def differentiate(self, i: int) -> "SparseMultiPoly":
        out: dict[tuple[int, ...], Fraction] = {}
        for expo, c in self.terms.items():
            if expo[i] == 0:
                continue
            e = list(expo)
            coef = c * e[i]
            e[i] -= 1
            out[tuple(e)] = out.get(tuple(e), Fraction(0)) + coef
        return SparseMultiPoly(self.arity, {e: v for e, v in out.items() if v})

    def coefficient(self, expo: tuple[int, ...]) -> Fraction:
        return self.terms.get(tuple(expo), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "SparseMultiPoly"):
        if self.arity != other.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")
