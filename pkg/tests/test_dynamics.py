from fractions import Fraction
from random import Random

import pytest

from plovlab.dynamics import (
    AbelianSurrogate,
    ModelError,
    charpoly,
    check_principles,
    degree_growth_exponent,
    delta_polynomial,
    find_distinguished_kappa,
    hilbert_top_coefficient_check,
    jordan_matrix,
    mat_identity,
    mat_mul,
    model_from_json,
    nilpotent_exp,
    nilpotent_log,
    power_sum_polynomial,
    random_conjugate,
    random_unimodular,
    run_pipeline,
    unipotent_power,
    verify_linear_system,
    w_vector,
)


def test_power_sum_polynomials():
    # S_i(n-1) = sum of m^i for m < n
    for i in range(6):
        s = power_sum_polynomial(i)
        for n in range(0, 8):
            assert s(n) == sum(Fraction(m) ** i for m in range(n))


def test_charpoly():
    # companion of x^2 - x - 1
    a = [[0, 1], [1, 1]]
    assert charpoly(a) == [Fraction(-1), Fraction(-1), Fraction(1)]


def test_unipotent_power_identity():
    m, u = unipotent_power([[1, 0], [0, 1]])
    assert m == 1 and u == mat_identity(2)


def test_unipotent_power_rotation():
    # order-4 rotation becomes the identity at the 4th power
    m, u = unipotent_power([[0, -1], [1, 0]])
    assert m == 4
    assert u == mat_identity(2)


def test_unipotent_power_rejects_entropy():
    with pytest.raises(ModelError):
        unipotent_power([[2, 1], [1, 1]])


def test_log_exp_roundtrip():
    u = [[1, 1, 0], [0, 1, 1], [0, 0, 1]]
    l = nilpotent_log(u)
    assert nilpotent_exp(l) == [[Fraction(x) for x in r] for r in u]


def test_surrogate_requires_unimodular():
    with pytest.raises(ModelError):
        AbelianSurrogate([[2, 0], [0, 1]])


def test_intersection_form_normalization():
    # H.H = 2 at g = 2 with the polarized determinant
    m = AbelianSurrogate([[1, 0], [0, 1]])
    assert m.intersect([m.H, m.H]) == 2


def test_intersection_form_invariance():
    rng = Random(13)
    for blocks in ((2,), (2, 1), (3,)):
        m = random_conjugate(blocks, rng)
        f = m.F
        for _ in range(10):
            vecs = [[rng.randint(-2, 2) for _ in range(m.dim)]
                    for _ in range(m.d)]
            moved = [[sum(f[i][j] * v[j] for j in range(m.dim))
                      for i in range(m.dim)] for v in vecs]
            assert m.intersect(moved) == m.intersect(vecs)


def test_degree_growth_exponent():
    for blocks, k in (((1, 1), 0), ((2,), 2), ((2, 1, 1), 2), ((3, 1), 4),
                      ((4,), 6)):
        m = AbelianSurrogate(jordan_matrix(blocks), jordan=blocks)
        assert degree_growth_exponent(m) == k


def test_w_vector_and_linear_system():
    m = AbelianSurrogate(jordan_matrix((2,)), jordan=(2,))
    for n in range(1, 5):
        assert verify_linear_system(m, n)
    w = w_vector(m, 2)
    assert w[(2, 0)] != 0 or w[(1, 1)] != 0


def test_w_vector_k0_error():
    m = AbelianSurrogate(jordan_matrix((1, 1)), jordan=(1, 1))
    with pytest.raises(ModelError):
        w_vector(m, 1)


def test_delta_polynomial_identity_action():
    m = AbelianSurrogate(jordan_matrix((1, 1, 1)), jordan=(1, 1, 1))
    exp = delta_polynomial(m)
    assert exp.plov == 3
    # identity action: polynomial is H^3 * n^3
    assert exp.poly.coeffs[-1] == m.intersect([m.H] * 3)


def test_find_distinguished_kappa():
    m = AbelianSurrogate(jordan_matrix((4,)), jordan=(4,))
    dist = find_distinguished_kappa(m)
    assert dist.t == (1, 1, 1, 1)
    assert dist.kappa == (6, 4, 2, 0)
    m2 = AbelianSurrogate(jordan_matrix((3, 1)), jordan=(3, 1))
    dist2 = find_distinguished_kappa(m2)
    assert dist2.t == (2, 1, 1)
    assert dist2.kappa == (4, 2, 0, 0)


def test_find_distinguished_kappa_k0_error():
    m = AbelianSurrogate(jordan_matrix((1, 1)), jordan=(1, 1))
    with pytest.raises(ModelError):
        find_distinguished_kappa(m)


def test_check_principles():
    rep = check_principles(4, 4, 10)
    assert rep["pass"] and rep["conjecture_lb"]
    rep = check_principles(4, 6, 16)
    assert rep["pass"]
    rep = check_principles(3, 2, 5)
    assert rep["parity"] and rep["conjecture_lb"]
    with pytest.raises(ModelError):
        check_principles(4, 4, 11)  # wrong parity
    with pytest.raises(ModelError):
        check_principles(4, 6, 12)  # inside the gap interval (10, 16)


def test_hilbert_check():
    for blocks in ((2,), (3,)):
        m = AbelianSurrogate(jordan_matrix(blocks), jordan=blocks)
        rep = hilbert_top_coefficient_check(m)
        assert rep["pass"]
    # d=2: coefficient of n^4 equals w_(2,0) / 12
    m2 = AbelianSurrogate(jordan_matrix((2,)), jordan=(2,))
    rep2 = hilbert_top_coefficient_check(m2)
    assert rep2["coefficient"] == rep2["w_kappa"] / 12


def test_random_unimodular_and_conjugate():
    rng = Random(41)
    from plovlab.dynamics import _int_det

    for g in (2, 3, 4):
        p = random_unimodular(g, rng)
        assert _int_det(p) in (1, -1)
    m = random_conjugate((2, 1), rng)
    rep = run_pipeline(m)
    assert rep["plov"] == 5
    assert rep["pass"]


def test_model_json_roundtrip():
    m = AbelianSurrogate(jordan_matrix((2, 1)), jordan=(2, 1))
    m2 = model_from_json(m.to_json())
    assert m2.a == m.a
    with pytest.raises(ValueError):
        model_from_json('{"type": "k3"}')


def test_abelian_plov_law():
    # plov = sum of squares of the Jordan block sizes, all types with g <= 5
    def types(total, cap):
        if total == 0:
            yield ()
            return
        for first in range(min(cap, total), 0, -1):
            for rest in types(total - first, first):
                yield (first,) + rest

    for g in range(2, 6):
        for blocks in types(g, g):
            m = AbelianSurrogate(jordan_matrix(blocks), jordan=blocks)
            exp = delta_polynomial(m)
            assert exp.plov == sum(b * b for b in blocks), blocks
            assert exp.poly.coeffs[-1] > 0


def test_maximality_equivalence():
    for g in range(2, 6):
        for blocks in ((g,), (g - 1, 1)) if g > 2 else ((g,),):
            m = AbelianSurrogate(jordan_matrix(blocks), jordan=blocks)
            k = degree_growth_exponent(m)
            plov = delta_polynomial(m).plov
            assert (k == 2 * g - 2) == (plov == g * g)


def test_combinatorial_vanishing():
    m = AbelianSurrogate(jordan_matrix((3, 1)), jordan=(3, 1))
    k = degree_growth_exponent(m)
    d = m.d
    for n in range(1, d * k + 1):
        w = w_vector(m, n, k)
        for lam, v in zip(w.index, w.values):
            if sum(lam) > d * k // 2:
                assert v == 0, lam
