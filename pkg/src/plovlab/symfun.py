"""Normalized monomial symmetric functions and Vandermonde-type expansions.

The normalized basis element attached to a partition lambda is the sum of
z^alpha / alpha! over all distinct rearrangements alpha of lambda.  Expanding
a symmetric polynomial in this basis turns the "raise one part" incidence
matrix into the divergence operator sum_i d/dz_i, which is the bridge between
the combinatorics and the intersection-number computations.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial

from .exactmat import SparseMultiPoly
from .partitions import (
    Partition,
    PartitionSet,
    format_partition,
    multiplicities,
    partition_set,
)

__all__ = [
    "CoeffVector",
    "mhat_poly",
    "mhat_expand",
    "apply_derivation",
    "vandermonde_poly",
    "vandermonde_coeff_vector",
    "integrate_unit_cube",
    "hilbert_product",
    "coeff_vector_to_json",
]


@dataclass(frozen=True)
class CoeffVector:
    """Rational coefficients indexed by a partition set in decreasing lex order."""

    index: PartitionSet
    entries: tuple[Fraction, ...] = field(repr=False)

    def __post_init__(self):
        if len(self.entries) != len(self.index):
            raise ValueError("entry count must match the index set")

    def __getitem__(self, lam: Partition) -> Fraction:
        return self.entries[self.index.index_of(lam)]

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.entries)


def distinct_permutations(items: tuple[int, ...]):
    """All distinct rearrangements, generated deterministically."""
    pool = sorted(items, reverse=True)

    def rec(remaining: list[int]):
        if not remaining:
            yield ()
            return
        seen = set()
        for i, x in enumerate(remaining):
            if x in seen:
                continue
            seen.add(x)
            for rest in rec(remaining[:i] + remaining[i + 1:]):
                yield (x,) + rest

    yield from rec(pool)


@lru_cache(maxsize=None)
def mhat_poly(lam: Partition) -> SparseMultiPoly:
    """Sum of z^alpha / alpha! over distinct rearrangements alpha of lam."""
    d = len(lam)
    terms = {}
    for alpha in distinct_permutations(lam):
        denom = 1
        for a in alpha:
            denom *= factorial(a)
        terms[alpha] = Fraction(1, denom)
    return SparseMultiPoly.from_terms(d, terms)


def mhat_expand(p: SparseMultiPoly, k: int, d: int, n: int) -> CoeffVector:
    """Coefficients of p in the normalized monomial basis over P(k,d,n).

    Validates that p is symmetric (adjacent transpositions suffice),
    homogeneous of degree n, and has per-variable degree at most k.  The
    lambda coefficient is the z^lambda coefficient of p times lambda!.
    """
    if p.arity != d:
        raise ValueError(f"arity {p.arity} != d = {d}")
    for expo, coef in p.terms.items():
        if sum(expo) != n:
            raise ValueError(f"term {expo} is not of degree {n}")
        if max(expo, default=0) > k:
            raise ValueError(f"term {expo} has variable degree above {k}")
    for i in range(d - 1):
        for expo, coef in p.terms.items():
            swapped = list(expo)
            swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
            if p.coefficient(tuple(swapped)) != coef:
                raise ValueError("polynomial is not symmetric")
    index = partition_set(k, d, n)
    entries = []
    for lam in index:
        mult = Fraction(1)
        for a in lam:
            mult *= factorial(a)
        entries.append(p.coefficient(lam) * mult)
    return CoeffVector(index, tuple(entries))


def coeff_vector_poly(x: CoeffVector) -> SparseMultiPoly:
    """The symmetric polynomial sum_lambda x_lambda mhat_lambda."""
    total = SparseMultiPoly.zero(x.index.d)
    for lam, c in zip(x.index, x.entries):
        if c:
            total = total + mhat_poly(lam).scale(c)
    return total


def apply_derivation(x: CoeffVector) -> CoeffVector:
    """Expand sum_i d/dz_i of the polynomial attached to x, one degree down.

    Computed by direct differentiation of monomials, independently of the
    incidence matrices.
    """
    k, d, n = x.index.k, x.index.d, x.index.n
    if n < 1:
        raise ValueError("n must be at least 1")
    poly = coeff_vector_poly(x)
    deriv = SparseMultiPoly.zero(d)
    for i in range(d):
        deriv = deriv + poly.differentiate(i)
    return mhat_expand(deriv, k, d, n - 1)


@lru_cache(maxsize=None)
def _vandermonde_square(m: int) -> SparseMultiPoly:
    """prod_{i<j<=m} (z_i - z_j)^2 in m variables."""
    poly = SparseMultiPoly.constant(m, 1)
    for i in range(m):
        for j in range(i + 1, m):
            diff = SparseMultiPoly.variable(m, i) - SparseMultiPoly.variable(m, j)
            poly = poly * diff * diff
    return poly


def vandermonde_poly(r: int, d: int) -> SparseMultiPoly:
    """Sum over (r+1)-subsets I of the squared Vandermonde in the I variables.

    The (r+1)-variable block is expanded once and re-embedded per subset.
    """
    if not 1 <= r <= d - 1:
        raise ValueError(f"need 1 <= r <= d-1, got r={r}, d={d}")
    block = _vandermonde_square(r + 1)
    total = SparseMultiPoly.zero(d)
    terms: dict[tuple[int, ...], Fraction] = {}
    for subset in combinations(range(d), r + 1):
        for expo, coef in block.terms.items():
            lifted = [0] * d
            for pos, e in zip(subset, expo):
                lifted[pos] = e
            key = tuple(lifted)
            s = terms.get(key, Fraction(0)) + coef
            if s:
                terms[key] = s
            else:
                terms.pop(key, None)
    total = SparseMultiPoly.from_terms(d, terms)
    return total


def vandermonde_coeff_vector(r: int, d: int) -> CoeffVector:
    """Coefficients of the degree r(r+1) Vandermonde sum over P(2r, d, r(r+1))."""
    return mhat_expand(vandermonde_poly(r, d), 2 * r, d, r * (r + 1))


def integrate_unit_cube(lam: Partition) -> Fraction:
    """Exact integral of mhat_lambda over the unit cube [0,1]^d."""
    d = len(lam)
    e = multiplicities(lam, max(lam) if lam else 0)
    denom = 1
    for i, e_i in enumerate(e):
        denom *= factorial(e_i) * factorial(i + 1) ** e_i
    return Fraction(factorial(d), denom)


def hilbert_product(d: int) -> Fraction:
    """prod_{j=1}^{d-1} (j!)^3 / ((2j)! (d+j)!)."""
    if d < 2:
        raise ValueError("d must be at least 2")
    out = Fraction(1)
    for j in range(1, d):
        out *= Fraction(factorial(j) ** 3, factorial(2 * j) * factorial(d + j))
    return out


def coeff_vector_to_json(x: CoeffVector) -> str:
    """JSON export: list of {partition, value} in index order."""
    payload = [
        {
            "partition": format_partition(lam),
            "value": f"{v.numerator}/{v.denominator}",
        }
        for lam, v in zip(x.index, x.entries)
    ]
    return json.dumps(payload)
