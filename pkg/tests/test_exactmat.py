from fractions import Fraction
from random import Random

import pytest

from plovlab.exactmat import (
    ExactMatrix,
    SparseMultiPoly,
    assemble_block_lower,
    hstack,
    matrix_rank,
    nullspace_basis,
)

from oracles import dense_nullspace, dense_rank


def random_matrix(rng, nrows, ncols, density=0.5):
    rows = []
    for _ in range(nrows):
        row = {}
        for c in range(ncols):
            if rng.random() < density:
                row[c] = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        rows.append(row)
    return ExactMatrix.from_rows(nrows, ncols, rows)


def test_rank_against_dense_oracle():
    rng = Random(11)
    for _ in range(60):
        nrows = rng.randint(0, 7)
        ncols = rng.randint(0, 7)
        m = random_matrix(rng, nrows, ncols)
        assert matrix_rank(m) == dense_rank(m.to_dense())


def test_nullspace_spans_kernel():
    rng = Random(23)
    for _ in range(40):
        nrows = rng.randint(1, 6)
        ncols = rng.randint(1, 7)
        m = random_matrix(rng, nrows, ncols)
        basis = nullspace_basis(m)
        assert len(basis) == ncols - matrix_rank(m)
        for v in basis:
            assert all(x == 0 for x in m.matvec(v))
        oracle = dense_nullspace(m.to_dense(), ncols)
        assert len(basis) == len(oracle)


def test_nullspace_normalization():
    m = ExactMatrix.from_dense([[Fraction(1), Fraction(1)]])
    basis = nullspace_basis(m)
    assert basis == [[Fraction(1), Fraction(-1)]]


def test_degenerate_shapes():
    wide = ExactMatrix.from_rows(0, 3, [])
    assert matrix_rank(wide) == 0
    assert len(nullspace_basis(wide)) == 3
    tall = ExactMatrix.from_rows(3, 0, [{}, {}, {}])
    assert matrix_rank(tall) == 0
    assert nullspace_basis(tall) == []


def test_entry_and_submatrix():
    m = ExactMatrix.from_dense([[1, 0, 2], [0, 3, 0]])
    assert m.entry(0, 2) == 2
    assert m.entry(1, 0) == 0
    sub = m.submatrix_columns([2, 0])
    assert sub.to_dense() == [[2, 1], [0, 0]]


def test_block_assembly():
    a = ExactMatrix.from_dense([[1, 2]])
    b = ExactMatrix.from_dense([[3, 0], [0, 4]])
    c = ExactMatrix.from_dense([[5], [6]])
    m = assemble_block_lower(a, b, c)
    assert m.to_dense() == [[1, 2, 0], [3, 0, 5], [0, 4, 6]]
    h = hstack(b, c)
    assert h.to_dense() == [[3, 0, 5], [0, 4, 6]]
    with pytest.raises(ValueError):
        assemble_block_lower(a, c, c)


def test_rank_is_deterministic():
    rng = Random(5)
    m = random_matrix(rng, 6, 6)
    ranks = {matrix_rank(m) for _ in range(3)}
    assert len(ranks) == 1


def test_rank_invariance():
    rng = Random(31)
    for _ in range(15):
        m = random_matrix(rng, 5, 5)
        dense = m.to_dense()
        r = matrix_rank(m)
        shuffled = dense[:]
        rng.shuffle(shuffled)
        assert matrix_rank(ExactMatrix.from_dense(shuffled)) == r
        scaled = [
            [v * Fraction(rng.randint(1, 5)) for v in row] for row in dense]
        assert matrix_rank(ExactMatrix.from_dense(scaled)) == r


def test_vandermonde_square_monomial_count():
    # (z1-z2)^2 (z1-z3)^2 (z2-z3)^2 has 19 monomials in 3 variables
    zs = [SparseMultiPoly.variable(3, i) for i in range(3)]
    p = SparseMultiPoly.constant(3, 1)
    for i in range(3):
        for j in range(i + 1, 3):
            diff = zs[i] - zs[j]
            p = p * diff * diff
    assert len(p.terms) == 19


def test_poly_product_commutative_associative():
    rng = Random(47)

    def random_poly():
        terms = {}
        for _ in range(rng.randint(1, 5)):
            expo = tuple(rng.randint(0, 3) for _ in range(2))
            terms[expo] = Fraction(rng.randint(-4, 4))
        return SparseMultiPoly.from_terms(2, terms)

    for _ in range(10):
        p, q, r = random_poly(), random_poly(), random_poly()
        assert p * q == q * p
        assert (p * q) * r == p * (q * r)
        assert p * SparseMultiPoly.constant(2, 1) == p


def test_poly_arithmetic():
    x = SparseMultiPoly.variable(2, 0)
    y = SparseMultiPoly.variable(2, 1)
    p = (x - y) * (x - y)
    assert p.coefficient((2, 0)) == 1
    assert p.coefficient((1, 1)) == -2
    assert p.coefficient((0, 2)) == 1
    dp = p.differentiate(0)
    assert dp.coefficient((1, 0)) == 2
    assert dp.coefficient((0, 1)) == -2
    assert (p - p).is_zero()
