"""Zero-entropy dynamics pipeline on concrete intersection models.

A model bundles a dimension d, a rational intersection form (symmetric
d-linear), an ample class H, and an integer matrix F acting on divisor
classes.  The pipeline replaces F by a unipotent power, takes the nilpotent
logarithm L, evaluates the intersection numbers w_lambda of the log-twisted
classes L^i H, expands the top self-intersection of the sum of pullbacks as
an exact polynomial in n, and reads off the polynomial volume growth as its
degree.  The concrete models are abelian surrogates: the lattice Z^g with an
integer unimodular action and the polarized-determinant intersection form on
symmetric matrices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, gcd
from random import Random

from .exactmat import ExactMatrix
from .incidence import build_incidence, kappa_of
from .partitions import (
    Partition,
    format_partition,
    lex_compare,
    multiplicities,
    partition_set,
)

__all__ = [
    "UnivariatePoly",
    "WVector",
    "DistinguishedPartition",
    "AbelianSurrogate",
    "unipotent_power",
    "nilpotent_log",
    "nilpotent_exp",
    "degree_growth_exponent",
    "w_vector",
    "verify_linear_system",
    "power_sum_polynomial",
    "delta_polynomial",
    "find_distinguished_kappa",
    "check_principles",
    "hilbert_top_coefficient_check",
    "jordan_matrix",
    "random_unimodular",
    "random_conjugate",
    "model_from_json",
    "run_pipeline",
]


class ModelError(ValueError):
    """A model violates an assumption of the pipeline."""


# ---------------------------------------------------------------------------
# exact univariate polynomials in n

@dataclass(frozen=True)
class UnivariatePoly:
    """Polynomial in n with rational coefficients, ascending by power."""

    coeffs: tuple[Fraction, ...] = field(default=())

    @staticmethod
    def from_coeffs(coeffs) -> "UnivariatePoly":
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return UnivariatePoly(tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def coeff(self, m: int) -> Fraction:
        return self.coeffs[m] if 0 <= m < len(self.coeffs) else Fraction(0)

    def __add__(self, other: "UnivariatePoly") -> "UnivariatePoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UnivariatePoly.from_coeffs(
            [self.coeff(i) + other.coeff(i) for i in range(n)]
        )

    def __mul__(self, other: "UnivariatePoly") -> "UnivariatePoly":
        if not self.coeffs or not other.coeffs:
            return UnivariatePoly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UnivariatePoly.from_coeffs(out)

    def scale(self, c) -> "UnivariatePoly":
        return UnivariatePoly.from_coeffs([v * Fraction(c) for v in self.coeffs])

    def __pow__(self, e: int) -> "UnivariatePoly":
        out = UnivariatePoly((Fraction(1),))
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __call__(self, n) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * n + c
        return acc


@lru_cache(maxsize=None)
def _bernoulli(m: int) -> Fraction:
    if m == 0:
        return Fraction(1)
    return Fraction(-1, m + 1) * sum(
        (comb(m + 1, j) * _bernoulli(j) for j in range(m)), Fraction(0)
    )


def power_sum_polynomial(i: int) -> UnivariatePoly:
    """S_i with S_i(n-1) = sum_{m=0}^{n-1} m^i, as a polynomial in n.

    Faulhaber via Bernoulli polynomials: (B_{i+1}(n) - B_{i+1}(0)) / (i+1).
    """
    if i < 0:
        raise ValueError("i must be nonnegative")
    deg = i + 1
    coeffs = [Fraction(0)] * (deg + 1)
    for j in range(deg + 1):
        coeffs[deg - j] += Fraction(comb(deg, j)) * _bernoulli(j)
    coeffs[0] -= _bernoulli(deg)  # subtract B_{i+1}(0)
    return UnivariatePoly.from_coeffs(coeffs).scale(Fraction(1, deg))


# ---------------------------------------------------------------------------
# exact square-matrix helpers (lists of lists of Fraction or int)

def mat_identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n, m, p = len(a), len(b), len(b[0]) if b else 0
    out = [[Fraction(0)] * p for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(m):
            v = ai[t]
            if v == 0:
                continue
            bt = b[t]
            for j in range(p):
                if bt[j]:
                    oi[j] += v * bt[j]
    return out

def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    c = Fraction(c)
    return [[x * c for x in r] for r in a]


def mat_is_zero(a) -> bool:
    return all(x == 0 for r in a for x in r)


def mat_pow(a, e: int):
    out = mat_identity(len(a))
    base = [[Fraction(x) for x in r] for r in a]
    while e:
        if e & 1:
            out = mat_mul(out, base)
        base = mat_mul(base, base)
        e >>= 1
    return out


def charpoly(a) -> list[Fraction]:
    """Characteristic polynomial det(xI - A), ascending coefficients.

    Faddeev-LeVerrier: exact over the rationals.
    """
    n = len(a)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    am = [[Fraction(x) for x in r] for r in a]
    mk = [row[:] for row in am]
    for k in range(1, n + 1):
        ck = -sum(mk[i][i] for i in range(n)) / k
        coeffs[n - k] = ck
        if k < n:
            shifted = [row[:] for row in mk]
            for i in range(n):
                shifted[i][i] += ck
            mk = mat_mul(am, shifted)
    return coeffs


# cyclotomic machinery for quasi-unipotency detection

@lru_cache(maxsize=None)
def _cyclotomic(n: int) -> tuple[Fraction, ...]:
    """Coefficients (ascending) of the n-th cyclotomic polynomial."""
    # x^n - 1 divided by the cyclotomic polynomials of proper divisors
    poly = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for m in range(1, n):
        if n % m == 0:
            poly = _polydiv_exact(poly, list(_cyclotomic(m)))
    return tuple(poly)


def _polydiv_exact(num: list[Fraction], den: list[Fraction]) -> list[Fraction]:
    num = list(num)
    out = [Fraction(0)] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        q = num[i + len(den) - 1] / den[-1]
        out[i] = q
        for j, dj in enumerate(den):
            num[i + j] -= q * dj
    if any(v != 0 for v in num):
        raise ArithmeticError("inexact polynomial division")
    return out


def _try_polydiv(num: list[Fraction], den: list[Fraction]):
    try:
        return _polydiv_exact(num, den)
    except ArithmeticError:
        return None


def _euler_phi(n: int) -> int:
    return sum(1 for i in range(1, n + 1) if gcd(i, n) == 1)


def unipotent_power(f) -> tuple[int, list[list[Fraction]]]:
    """Least m with F^m unipotent, plus U = F^m.

    Checks that every irreducible factor of the characteristic polynomial is
    cyclotomic (all eigenvalues roots of unity); raises ModelError otherwise.
    """
    f = [[Fraction(x) for x in r] for r in f]
    g = len(f)
    poly = charpoly(f)
    orders = []
    residual = list(poly)
    # phi(n) <= g bounds the order of any root of unity among the eigenvalues
    n_cap = 2 * g * g + 2
    for n in range(1, n_cap + 1):
        if _euler_phi(n) > g:
            continue
        cyc = list(_cyclotomic(n))
        while len(residual) >= len(cyc):
            quo = _try_polydiv(residual, cyc)
            if quo is None:
                break
            residual = quo
            if n not in orders:
                orders.append(n)
    if len(residual) > 1:
        raise ModelError(
            "action is not quasi-unipotent (positive entropy or "
            "non-root-of-unity eigenvalues)"
        )
    m = 1
    for n in orders:
        m = m * n // gcd(m, n)
    u = mat_pow(f, m)
    nilp = mat_sub(u, mat_identity(g))
    power = [row[:] for row in nilp]
    for _ in range(g):
        if mat_is_zero(power):
            break
        power = mat_mul(power, nilp)
    if not mat_is_zero(power):
        raise ModelError("F^m is not unipotent")
    return m, u


def nilpotent_log(u) -> list[list[Fraction]]:
    """log U = sum (-1)^{i+1} (U - I)^i / i for unipotent U; exact and finite."""
    g = len(u)
    n = mat_sub([[Fraction(x) for x in r] for r in u], mat_identity(g))
    out = [[Fraction(0)] * g for _ in range(g)]
    power = mat_identity(g)
    for i in range(1, g + 1):
        power = mat_mul(power, n)
        if mat_is_zero(power):
            break
        out = mat_add(out, mat_scale(power, Fraction((-1) ** (i + 1), i)))
    else:
        if not mat_is_zero(mat_mul(power, n)):
            raise ModelError("input is not unipotent")
    return out


def nilpotent_exp(l) -> list[list[Fraction]]:
    """exp of a nilpotent matrix via the terminating series."""
    g = len(l)
    out = mat_identity(g)
    power = mat_identity(g)
    for i in range(1, g + 1):
        power = mat_mul(power, l)
        if mat_is_zero(power):
            break
        out = mat_add(out, mat_scale(power, Fraction(1, factorial(i))))
    return out


# ---------------------------------------------------------------------------
# abelian surrogates

def _sym_basis(g: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(g) for j in range(i, g)]


def _vec_to_sym(g: int, vec) -> list[list[Fraction]]:
    s = [[Fraction(0)] * g for _ in range(g)]
    for (i, j), v in zip(_sym_basis(g), vec):
        s[i][j] = Fraction(v)
        s[j][i] = Fraction(v)
    return s


def _sym_to_vec(g: int, s) -> tuple[Fraction, ...]:
    return tuple(Fraction(s[i][j]) for i, j in _sym_basis(g))


def _int_det(m: list[list[int]]) -> int:
    """Fraction-free determinant of a small integer matrix."""
    a = [row[:] for row in m]
    n = len(a)
    sign = 1
    prev = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            sign = -sign
        for r in range(c + 1, n):
            for j in range(c + 1, n):
                a[r][j] = (a[c][c] * a[r][j] - a[r][c] * a[c][j]) // prev
            a[r][c] = 0
        prev = a[c][c]
    return sign * a[-1][-1]


class AbelianSurrogate:
    """Product-of-elliptic-curves stand-in: divisor classes are symmetric g x g
    rational matrices, the action is S -> A^T S A for an integer unimodular A,
    H is the identity, and the intersection form is the polarized determinant
    (the coefficient of t_1...t_g in det(sum t_i S_i), computed as a sum of
    g! column-mixed determinants)."""

    def __init__(self, a: list[list[int]], jordan: tuple[int, ...] | None = None):
        g = len(a)
        if any(len(r) != g for r in a):
            raise ValueError("A must be square")
        det = _int_det([[int(x) for x in r] for r in a])
        if det not in (1, -1):
            raise ModelError(f"A must be unimodular, det = {det}")
        self.g = g
        self.d = g
        self.a = [[int(x) for x in r] for r in a]
        self.jordan = jordan
        self.dim = g * (g + 1) // 2
        self.H = _sym_to_vec(g, mat_identity(g))
        self.F = self._action_matrix()

    def _action_matrix(self) -> list[list[int]]:
        basis = _sym_basis(self.g)
        at = [[self.a[j][i] for j in range(self.g)] for i in range(self.g)]
        cols = []
        for i, j in basis:
            b = [[0] * self.g for _ in range(self.g)]
            b[i][j] = 1
            b[j][i] = 1
            image = mat_mul(
                [[Fraction(x) for x in row] for row in at],
                mat_mul([[Fraction(x) for x in row] for row in b],
                        [[Fraction(x) for x in row] for row in self.a]),
            )
            cols.append(_sym_to_vec(self.g, image))
        return [[int(cols[c][r]) for c in range(self.dim)]
                for r in range(self.dim)]

    def intersect(self, vecs) -> Fraction:
        if len(vecs) != self.g:
            raise ValueError(f"need exactly {self.g} classes")
        mats = [_vec_to_sym(self.g, v) for v in vecs]
        return _mixed_determinant(mats)

    def to_json(self) -> str:
        return json.dumps({"type": "abelian", "g": self.g, "A": self.a})


def _mixed_determinant(mats: list[list[list[Fraction]]]) -> Fraction:
    """Sum over bijections phi of det(column j taken from mats[phi(j)]).

    Duplicate matrices are grouped: distinct assignments are enumerated once
    and weighted by the product of multiplicity factorials.
    """
    g = len(mats)
    # group identical matrices
    groups: list[tuple[list[list[Fraction]], int]] = []
    for m in mats:
        for idx, (rep, _) in enumerate(groups):
            if rep == m:
                groups[idx] = (rep, groups[idx][1] + 1)
                break
        else:
            groups.append((m, 1))
    weight = 1
    for _, mult in groups:
        weight *= factorial(mult)
    # clear denominators per matrix; track the common scale
    scale = Fraction(1)
    cleared = []
    for rep, mult in groups:
        mults = 1
        for row in rep:
            for v in row:
                mults = mults * v.denominator // gcd(mults, v.denominator)
        cleared.append(([[int(v * mults) for v in row] for row in rep], mult))
        scale /= Fraction(mults) ** mult

    total = 0
    counts = [mult for _, mult in cleared]

    def assign(col: int, current: list[int]):
        nonlocal total
        if col == g:
            mat = [[cleared[current[j]][0][i][j] for j in range(g)]
                   for i in range(g)]
            total += _int_det(mat)
            return
        for gi in range(len(cleared)):
            if counts[gi]:
                counts[gi] -= 1
                current.append(gi)
                assign(col + 1, current)
                current.pop()
                counts[gi] += 1

    assign(0, [])
    return Fraction(total) * weight * scale


# ---------------------------------------------------------------------------
# the pipeline

def _prepared(model):
    """Cache (m, U, L, [L^i H]) on the model instance."""
    cache = getattr(model, "_pipeline_cache", None)
    if cache is None:
        m, u = unipotent_power(model.F)
        l = nilpotent_log(u)
        dim = model.dim
        lh = [list(model.H)]
        power = [list(r) for r in mat_identity(dim)]
        while True:
            power = mat_mul(power, l)
            if mat_is_zero(power):
                break
            lh.append([sum(power[i][j] * Fraction(model.H[j])
                           for j in range(dim)) for i in range(dim)])
        cache = {"m": m, "U": u, "L": l, "LH": lh}
        model._pipeline_cache = cache
    return cache


def _lh(model, i: int):
    lh = _prepared(model)["LH"]
    return lh[i] if i < len(lh) else [Fraction(0)] * model.dim


def degree_growth_exponent(model) -> int:
    """max i with (L^i H) . H^{d-1} nonzero; must be even and at most 2d-2."""
    d = model.d
    best = 0
    lh = _prepared(model)["LH"]
    for i in range(len(lh) - 1, -1, -1):
        if model.intersect([lh[i]] + [list(model.H)] * (d - 1)) != 0:
            best = i
            break
    if best % 2 != 0 or best > 2 * d - 2:
        raise ModelError(f"degree growth exponent {best} is odd or above 2d-2")
    nilp_index = len(lh)  # L^(len) = 0, so nilpotency index is len(lh)
    if best != nilp_index - 1:
        import warnings

        warnings.warn(
            f"degree exponent {best} != nilpotency index minus one "
            f"({nilp_index - 1}); geometric models should agree",
            stacklevel=2,
        )
    return best


@dataclass(frozen=True)
class WVector:
    k: int
    d: int
    n: int
    index: object
    values: tuple[Fraction, ...]

    def __getitem__(self, lam: Partition) -> Fraction:
        return self.values[self.index.index_of(lam)]


def w_vector(model, n: int, k: int | None = None) -> WVector:
    """w_lambda = intersection of (L^{lambda_1} H, ..., L^{lambda_d} H) over P(k,d,n)."""
    d = model.d
    if k is None:
        k = degree_growth_exponent(model)
    if k == 0:
        raise ModelError("k = 0: no valid n, the w-vector is empty")
    if not 1 <= n <= d * k:
        raise ValueError(f"n={n} outside [1, {d * k}]")
    index = partition_set(k, d, n)
    values = tuple(
        model.intersect([_lh(model, part) for part in lam]) for lam in index
    )
    return WVector(k, d, n, index, values)


def verify_linear_system(model, n: int, k: int | None = None) -> bool:
    """A_{k,d,n} . w = 0, exactly."""
    if k is None:
        k = degree_growth_exponent(model)
    w = w_vector(model, n, k)
    mat = build_incidence(k, model.d, n)
    residual = mat.data.matvec(list(w.values))
    if any(v != 0 for v in residual):
        raise ModelError(f"linear system violated at (k={k}, d={model.d}, n={n})")
    return True


@dataclass(frozen=True)
class DeltaExpansion:
    poly: UnivariatePoly
    plov: int
    coefficient2: tuple[Fraction, ...]  # entry m = sum over P(k,d,m) of the closed form


def delta_polynomial(model) -> DeltaExpansion:
    """Expand the d-th power of the pullback sum as an exact polynomial in n.

    Multinomial expansion over restricted partitions, reusing the w-values:
    each lambda contributes d!/prod(e_i!) * prod (S_i(n-1)/i!)^{e_i} * w_lambda.
    """
    d = model.d
    k = degree_growth_exponent(model)
    if k == 0:
        top = model.intersect([list(model.H)] * d)
        coeffs = [Fraction(0)] * d + [Fraction(top)]
        poly = UnivariatePoly.from_coeffs(coeffs)
        return DeltaExpansion(poly, poly.degree, (top * 1,))
    s_over_fact = [power_sum_polynomial(i).scale(Fraction(1, factorial(i)))
                   for i in range(k + 1)]
    total = UnivariatePoly(())
    coeff2 = []
    for m in range(0, d * k + 1):
        c2_m = Fraction(0)
        for lam in partition_set(k, d, m):
            w = model.intersect([_lh(model, part) for part in lam])
            e = multiplicities(lam, k)
            denom = 1
            denom2 = 1
            for i, e_i in enumerate(e):
                denom *= factorial(e_i)
                denom2 *= factorial(e_i) * factorial(i + 1) ** e_i
            c2_m += Fraction(factorial(d), denom2) * w
            if w == 0:
                continue
            term = UnivariatePoly((Fraction(factorial(d), denom) * w,))
            for i, e_i in enumerate(e):
                if e_i:
                    term = term * (s_over_fact[i] ** e_i)
            total = total + term
        coeff2.append(c2_m)
    return DeltaExpansion(total, total.degree, tuple(coeff2))


@dataclass(frozen=True)
class DistinguishedPartition:
    r: int
    t: tuple[int, ...]
    kappa: Partition


def find_distinguished_kappa(model) -> DistinguishedPartition:
    """The unique positive tuple t with w positive at kappa(t) and vanishing above it."""
    d = model.d
    k = degree_growth_exponent(model)
    if k < 2:
        raise ModelError("distinguished partition requires k = 2r >= 2")
    r = k // 2
    all_w: list[tuple[Partition, Fraction]] = []
    for n in range(1, d * k + 1):
        w = w_vector(model, n, k)
        all_w.extend(zip(w.index, w.values))

    def compositions(total: int, parts: int):
        if parts == 1:
            if total >= 1:
                yield (total,)
            return
        for first in range(1, total - parts + 2):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    matches = []
    for t in compositions(d, r + 1):
        kappa = kappa_of(t)
        if model_w_at(all_w, kappa) <= 0:
            continue
        if all(v == 0 for lam, v in all_w if lex_compare(lam, kappa) > 0):
            matches.append(t)
    if len(matches) != 1:
        raise ModelError(f"distinguished tuple not unique: {matches}")
    t = matches[0]
    kappa = kappa_of(t)
    weighted = sum(2 * j * t[j] for j in range(1, r + 1))
    if not r * (r + 1) <= weighted <= r * d:
        raise ModelError(f"boundedness violated: {weighted}")
    if t[r] > (d - r + 1) // 2:
        raise ModelError(f"t_r = {t[r]} above floor((d-r+1)/2)")
    return DistinguishedPartition(r, t, kappa)


def model_w_at(all_w, kappa: Partition) -> Fraction:
    for lam, v in all_w:
        if lam == kappa:
            return v
    return Fraction(0)


def check_principles(d: int, k: int, plov: int) -> dict:
    """Parity, gap interval, proven upper bound; the conjectured lower bound is
    reported but never asserted."""
    parity = (plov - d) % 2 == 0
    gap_lo = d * (d - 2) + 2 * max(1, d // 4)
    gap_hi = d * d
    gap = not (gap_lo < plov < gap_hi)
    upper = plov <= (k // 2 + 1) * d
    conjecture_lb = 4 * plov >= 4 * d + k * (k + 2)
    report = {
        "parity": parity,
        "gap": gap,
        "gap_interval": (gap_lo, gap_hi),
        "upper_bound": upper,
        "conjecture_lb": conjecture_lb,
        "pass": parity and gap and upper,
    }
    if not report["pass"]:
        raise ModelError(f"principle check failed: {report}")
    return report


def hilbert_top_coefficient_check(model) -> dict:
    """Top coefficient of the volume polynomial against the closed form."""
    from .symfun import hilbert_product

    d = model.d
    k = degree_growth_exponent(model)
    if k != 2 * d - 2:
        raise ValueError("requires maximal degree growth k = 2d-2")
    expansion = delta_polynomial(model)
    top = expansion.poly.coeff(d * d)
    kappa = kappa_of(tuple([1] * d))
    w_kappa = model.intersect([_lh(model, part) for part in kappa])
    expected = w_kappa * hilbert_product(d)
    report = {"coefficient": top, "expected": expected, "w_kappa": w_kappa,
              "pass": top == expected}
    if not report["pass"]:
        raise ModelError(f"Hilbert closed form mismatch: {report}")
    return report


# ---------------------------------------------------------------------------
# model constructors and the full report

def jordan_matrix(blocks: tuple[int, ...]) -> list[list[int]]:
    """Block-diagonal unipotent matrix with the given Jordan block sizes."""
    g = sum(blocks)
    a = [[0] * g for _ in range(g)]
    pos = 0
    for b in blocks:
        for i in range(b):
            a[pos + i][pos + i] = 1
            if i + 1 < b:
                a[pos + i][pos + i + 1] = 1
        pos += b
    return a


def random_unimodular(g: int, rng: Random, steps: int | None = None) -> list[list[int]]:
    """Product of integer shears with coefficients in [-2, 2]; determinant one."""
    p = [[int(i == j) for j in range(g)] for i in range(g)]
    for _ in range(steps if steps is not None else 3 * g):
        i = rng.randrange(g)
        j = rng.randrange(g)
        if i == j:
            continue
        c = rng.randint(-2, 2)
        for col in range(g):
            p[i][col] += c * p[j][col]
    return p


def _int_inverse(p: list[list[int]]) -> list[list[int]]:
    g = len(p)
    aug = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(g)]
           for i, row in enumerate(p)]
    for c in range(g):
        piv = next(r for r in range(c, g) if aug[r][c])
        aug[c], aug[piv] = aug[piv], aug[c]
        scale = aug[c][c]
        aug[c] = [v / scale for v in aug[c]]
        for r in range(g):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[c])]
    inv = [[row[g + j] for j in range(g)] for row in aug]
    if any(v.denominator != 1 for row in inv for v in row):
        raise ValueError("matrix is not unimodular")
    return [[int(v) for v in row] for row in inv]


def random_conjugate(blocks: tuple[int, ...], rng: Random) -> AbelianSurrogate:
    j = jordan_matrix(blocks)
    p = random_unimodular(sum(blocks), rng)
    p_inv = _int_inverse(p)
    jf = [[Fraction(x) for x in r] for r in j]
    pf = [[Fraction(x) for x in r] for r in p]
    pif = [[Fraction(x) for x in r] for r in p_inv]
    a = mat_mul(pif, mat_mul(jf, pf))
    return AbelianSurrogate([[int(x) for x in r] for r in a], jordan=tuple(blocks))


def model_from_json(text: str) -> AbelianSurrogate:
    spec = json.loads(text)
    if spec.get("type") != "abelian":
        raise ValueError(f"unsupported model type {spec.get('type')!r}")
    return AbelianSurrogate(spec["A"])


def run_pipeline(model: AbelianSurrogate) -> dict:
    """Full dynamics report for one model: k, plov, kappa, and all checks."""
    d = model.d
    k = degree_growth_exponent(model)
    expansion = delta_polynomial(model)
    plov = expansion.plov
    report: dict = {
        "g": model.g,
        "d": d,
        "k": k,
        "jordan": list(model.jordan) if model.jordan else None,
        "plov": plov,
        "kappa": None,
        "t": None,
        "top_coefficient": str(expansion.poly.coeffs[-1]),
        "checks": {},
    }
    checks = check_principles(d, k, plov)
    report["checks"] = {
        "parity": checks["parity"],
        "gap": checks["gap"],
        "upper_bound": checks["upper_bound"],
        "conjecture_lb": checks["conjecture_lb"],
    }
    if k >= 2:
        for n in range(1, d * k + 1):
            verify_linear_system(model, n, k)
        dist = find_distinguished_kappa(model)
        report["kappa"] = format_partition(dist.kappa)
        report["t"] = list(dist.t)
    if k == 2 * d - 2:
        hil = hilbert_top_coefficient_check(model)
        report["checks"]["hilbert"] = hil["pass"]
    else:
        report["checks"]["hilbert"] = None
    # conjecture_lb is observational only; it never gates the pass flag
    report["pass"] = all(
        v
        for name, v in report["checks"].items()
        if v is not None and name != "conjecture_lb"
    )
    return report
