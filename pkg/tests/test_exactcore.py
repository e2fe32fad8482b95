from fractions import Fraction
import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from higgslab.errors import DegenerateInput, InputError, ZeroPolynomial
from higgslab.exactcore import (
    AuxPoly,
    Field,
    Mat,
    Poly,
    RATIONALS,
    RatFunc,
    column_hermite,
    column_span_contains,
    completion,
    maximal_minors_gcd,
    poly_squarefree,
    resultant,
    saturated_kernel,
    smith_hermite_basis,
    smith_invariants,
)
from higgslab.exactcore.matrix import bareiss_det

F = Field(1000003)
z = Poly.z(F)
one = Poly.const(1, F)
coeffs = st.lists(st.integers(-50, 50), min_size=0, max_size=5)


def _sym(f: Poly):
    x = sympy.Symbol("z")
    return sympy.Poly(list(reversed(f.c)) or [0], x, modulus=F.modulus)


def _laplace(rows):
    """Cofactor expansion along the first row."""
    n = len(rows)
    if n == 0:
        return one
    total = Poly.zero_like(z)
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * _laplace(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def _rand_poly(rng, deg):
    return Poly([F.random(rng) for _ in range(deg + 1)], F)


# --- field ------------------------------------------------------------------

def test_field_basic_ops():
    assert F.inv(F(2)) * 2 % F.modulus == 1
    assert F(-1) == F.modulus - 1
    assert F.from_str(F.to_str(F(-7))) == F(-7)
    r = F.sqrt(F(4))
    assert r is not None and F.mul(r, r) == 4
    assert Field.from_json(F.to_json()) == F


def test_field_rejects_bad_modulus():
    with pytest.raises(InputError):
        Field(9)
    with pytest.raises(InputError):
        Field(2)


def test_rationals():
    Q = RATIONALS
    assert Q("3/4") == Fraction(3, 4)
    assert Q.inv(Q(3)) == Fraction(1, 3)
    assert Q.sqrt(Q(Fraction(9, 4))) == Fraction(3, 2)
    assert Q.sqrt(Q(2)) is None
    zq = Poly.z(Q)
    assert ((zq - Fraction(1, 2)) * (zq + 3)).roots() == [-3, Fraction(1, 2)]


def test_roots_sorted_and_split():
    f = Poly.from_roots([5, 1, 3], F)
    assert f.roots() == [1, 3, 5]
    assert Poly([1, 0, 1], Field(7)).roots() == []


# --- polynomials --------------------------------------------------------------

@given(coeffs, coeffs)
def test_poly_mul_divmod_vs_sympy(a, b):
    f, g = Poly(a, F), Poly(b, F)
    assert _sym(f * g) == _sym(f) * _sym(g)
    if g:
        q, r = divmod(f, g)
        assert q * g + r == f and r.deg < g.deg
        sq, sr = sympy.div(_sym(f), _sym(g))
        assert _sym(q) == sq and _sym(r) == sr


@given(coeffs, coeffs)
def test_gcd_and_xgcd(a, b):
    f, g = Poly(a, F), Poly(b, F)
    if not f and not g:
        return
    d = f.gcd(g)
    assert d.lc == 1
    assert not (f % d) and not (g % d)
    d2, s, t = f.xgcd(g)
    assert s * f + t * g == d2 == d


def test_poly_json_and_eval():
    f = z * z * 3 - 1
    assert Poly.from_json(f.to_json(), F) == f
    assert f(2) == 11
    assert f(z + 1) == (z + 1) * (z + 1) * 3 - 1
    assert f.derivative() == z * 6
    assert (z ** 3).valuation_at(0) == 3


def test_squarefree():
    assert poly_squarefree(z * z + z)
    assert not poly_squarefree(z * z)
    assert poly_squarefree(z)
    with pytest.raises(ZeroPolynomial):
        poly_squarefree(Poly.zero_like(z))


def test_ratfunc_normal_form():
    r = RatFunc(z * z - 1, (z - 1) * 2)
    assert r.is_poly() and r.to_poly() == (z + 1) * F.inv(F(2))
    s = RatFunc(one, z * z)
    assert s.pole_order_at(0) == 2
    assert (s * z * z).to_poly() == one


# --- matrices ---------------------------------------------------------------

@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(0, 10 ** 6))
def test_det_vs_cofactor_and_sympy(n, seed):
    rng = random.Random(seed)
    rows = [[_rand_poly(rng, rng.randint(0, 2)) for _ in range(n)] for _ in range(n)]
    d = Mat(rows, F).det()
    assert d == _laplace(rows)
    zs = sympy.Symbol("z")
    S = sympy.Matrix([[sum(int(c) * zs ** k for k, c in enumerate(e.c)) for e in r] for r in rows])
    assert _sym(d) == sympy.Poly(S.det(method="berkowitz"), zs, modulus=F.modulus)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4), st.integers(0, 10 ** 6))
def test_charpoly_at_zero_is_signed_det(n, seed):
    rng = random.Random(seed)
    A = Mat([[_rand_poly(rng, 1) for _ in range(n)] for _ in range(n)], F)
    cp = A.charpoly()
    assert cp.deg == n and cp.lc == one
    assert cp.coeff(0) == A.det() * (-1) ** n


def test_charpoly_three_by_three_example():
    A = Mat([[0, 0, z], [0, 0, -1], [-1, 0, 0]], F)
    assert A.charpoly() == AuxPoly([0, z, 0, 1], F)


def test_bareiss_ratfunc_det_and_inverse():
    inv = RatFunc(one, z)
    M = Mat([[inv, one], [one, z]], F)
    assert M.det() == RatFunc(Poly.zero_like(z)) or M.det() == 0
    U = Mat([[1, z], [0, 1]], F)
    assert U.is_unimodular() and U @ U.inverse() == Mat.identity(2, F)
    assert bareiss_det([[z, one], [one, z]], F) == z * z - 1


def test_nonsquare_det_rejected():
    with pytest.raises(InputError):
        Mat([[1, 2, 3]], F).det()


# --- normal forms -------------------------------------------------------------

def _rand_mat(rng, n, m, deg=2):
    return Mat([[_rand_poly(rng, rng.randint(0, deg)) for _ in range(m)] for _ in range(n)], F)


@pytest.mark.parametrize("seed", range(200))
def test_saturated_kernel_random(seed):
    rng = random.Random(seed)
    n, m = rng.randint(1, 3), rng.randint(2, 4)
    A = _rand_mat(rng, n, m)
    if rng.random() < 0.3:  # force rank deficiency
        A = Mat([A.row(0)] + [[e * 2 for e in A.row(0)]] + [A.row(i) for i in range(1, n)], F)
    K = saturated_kernel(A)
    assert (A @ K).is_zero()
    if K.ncols:
        assert maximal_minors_gcd(K) == one
        P, Pinv = completion(K)
        assert P.is_unimodular() and P @ Pinv == Mat.identity(m, F)
        assert P.submatrix(range(m), range(K.ncols)) == K


def test_saturated_kernel_examples():
    assert saturated_kernel(Mat([[z, -z]], F)) == Mat([[1], [1]], F)
    assert saturated_kernel(Mat([[z * z, -one]], F)) == Mat([[1], [z * z]], F)
    assert saturated_kernel(Mat.identity(3, F)).ncols == 0


def test_column_hermite_transforms():
    rng = random.Random(1)
    A = _rand_mat(rng, 2, 3)
    res = column_hermite(A)
    AU = A @ res.U
    assert AU.submatrix(range(2), range(res.rank)) == res.H
    assert AU.submatrix(range(2), range(res.rank, 3)).is_zero()
    assert res.U @ res.Uinv == Mat.identity(3, F)
    assert res.U.is_unimodular()


def test_smith_hermite_basis_example():
    inv = RatFunc(one, z)
    B = smith_hermite_basis([[one, 0], [0, one], [inv, inv]], 2, F)
    assert B == Mat([[inv, 0], [inv, 1]], F)


@pytest.mark.parametrize("seed", range(20))
def test_smith_hermite_basis_span(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 3)
    gens = [[_rand_poly(rng, 1) for _ in range(n)] for _ in range(n + 1)]
    x = F.random(rng)
    gens.append([RatFunc(g, z - x) for g in gens[0]])
    B = smith_hermite_basis(gens, n, F)
    for g in gens:
        assert column_span_contains(B, g)
    for j in range(B.ncols):
        # each basis vector is a combination of generators: its common
        # denominator divides that of the generator set
        assert all(RatFunc.of(B[i, j], F).den.deg <= 1 for i in range(n))


def test_smith_invariants():
    assert smith_invariants(Mat.diag([z * z, z], F)) == [z, z * z]
    assert smith_invariants(Mat([[z, 0], [0, 1]], F)) == [one, z]
    assert smith_invariants(Mat([[z, one], [0, z]], F)) == [one, z * z]


# --- resultants -------------------------------------------------------------

def test_resultant_examples():
    a2 = z + 3
    assert resultant(AuxPoly([a2, 0, 1], F, "xi"), AuxPoly([0, 2], F, "xi")) == a2 * 4
    assert resultant(AuxPoly([-z, 0, 1], F, "xi"), AuxPoly([0, 2], F, "xi")) == z * (-4)
    with pytest.raises(DegenerateInput):
        resultant(AuxPoly([Poly.zero_like(z)], F), AuxPoly([0, 1], F))


@settings(max_examples=80, deadline=None)
@given(coeffs.filter(lambda c: any(c)), coeffs.filter(lambda c: any(c)), st.booleans(), st.integers(0, 50))
def test_resultant_zero_iff_common_factor(a, b, share, root):
    f, g = Poly(a, F), Poly(b, F)
    if share:
        f, g = f * (z - root), g * (z - root)
    fa = AuxPoly([Poly.const(c, F) for c in f.c], F)
    ga = AuxPoly([Poly.const(c, F) for c in g.c], F)
    if f.deg < 1 and g.deg < 1:
        return
    assert (not resultant(fa, ga)) == (f.gcd(g).deg > 0)
