import random

import pytest
from hypothesis import given, settings, strategies as st

from higgslab.errors import InputError, NotSplit
from higgslab.exactcore import AuxPoly, Field, Poly
from higgslab.spectral import (
    SpectralCoeffs,
    branch_points,
    char_poly_model,
    complete_homogeneous,
    cover_genera,
    cover_models,
    homogeneous_from_roots,
    is_regular,
    random_regular_coeffs,
    regularity_check,
)

F = Field(1000003)
z = Poly.z(F)
one = Poly.const(1, F)


def _curve_genus(n: int, degL: int, g: int) -> int:
    """Genus of a smooth n-sheeted spectral curve in the total space of L (adjunction)."""
    return 1 + n * (g - 1) + n * (n - 1) * degL // 2


def test_regularity_examples():
    assert regularity_check(SpectralCoeffs.build([z], F=F)).passed
    rep = regularity_check(SpectralCoeffs.build([0, z], F=F))
    assert not rep.verdict("a_p and a_(p-1) coprime")
    rep = regularity_check(SpectralCoeffs.build([z + 1, z * z], F=F))
    assert not rep.verdict("a_p squarefree")


def test_input_validation():
    with pytest.raises(InputError):
        SpectralCoeffs.build([0], F=F)
    with pytest.raises(InputError):
        SpectralCoeffs(2, 1, 2, (z,))
    with pytest.raises(InputError):
        SpectralCoeffs.build([z], g=1, F=F)
    small = Field(5)
    with pytest.raises(InputError):
        SpectralCoeffs.build([Poly([1, 0, 0, 1], small)], F=small)


def test_polynomials_shape():
    sc = SpectralCoeffs.build([z + 1, z], q=2, F=F)
    assert sc.sbar_poly() == AuxPoly([z, z + 1, 1], F, "xi")
    assert sc.s_poly() == AuxPoly([z, 0, z + 1, 0, 1], F)
    assert sc.c_poly() == AuxPoly([-z, 0, 1], F, "zeta")
    assert char_poly_model(sc) == AuxPoly([0, 0, z, 0, z + 1, 0, 1], F)


def test_json_round_trip():
    sc = SpectralCoeffs.build([z + 3, z * z - 2], q=3, g=4, F=F)
    assert SpectralCoeffs.from_json(sc.to_json(), F) == sc
    with pytest.raises(InputError):
        SpectralCoeffs.from_json({"p": 1}, F)


def test_newton_example():
    sc = SpectralCoeffs.build([-(z + 1), z], F=F)
    h = complete_homogeneous(sc, 2)
    assert h[1] == z + 1
    assert h[2] == z * z + z + 1
    with pytest.raises(InputError):
        complete_homogeneous(sc, -1)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(0, 10 ** 6))
def test_newton_vs_brute_force(p, seed):
    rng = random.Random(seed)
    roots = [Poly([F.random(rng), F.random(rng)], F) for _ in range(p)]
    pbar = AuxPoly([one], F, "xi")
    for r in roots:
        pbar = pbar * AuxPoly([-r, one], F, "xi")
    a = [pbar.coeff(p - k) for k in range(1, p + 1)]
    if not a[-1]:
        return
    sc = SpectralCoeffs.build(a, F=F)
    h = complete_homogeneous(sc, 6)
    for u in range(1, 7):
        assert h[u] == homogeneous_from_roots(roots, u)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4), st.integers(0, 10 ** 6))
def test_generating_function_identity(p, seed):
    """(1 + a_1 t + ... + a_p t^p) * sum h_u t^u = 1 up to t^N."""
    rng = random.Random(seed)
    sc = random_regular_coeffs(p, rng, F=F, max_deg_ap=3, max_deg=2)
    N = 3 * p
    h = complete_homogeneous(sc, N)
    for n in range(1, N + 1):
        s = Poly.zero_like(z)
        for k in range(0, min(n, p) + 1):
            s = s + sc.coeff(k) * h[n - k]
        assert not s


def test_scalar_brute_force():
    assert homogeneous_from_roots([2, 3], 2) == 4 + 6 + 9


@pytest.mark.parametrize("p", range(1, 6))
@pytest.mark.parametrize("g", range(2, 6))
def test_cover_genera_vs_adjunction(p, g):
    cg = cover_genera(p, g)
    assert cg.g_S == _curve_genus(2 * p, 2 * g - 2, g)
    assert cg.g_Sbar == _curve_genus(p, 4 * g - 4, g)
    # Riemann-Hurwitz for the double cover branched at the 4p(g-1) zeros of a_p
    assert 2 * cg.g_C - 2 == 2 * (2 * g - 2) + 4 * p * (g - 1)
    assert cg.consistent


def test_cover_genera_example():
    cg = cover_genera(2, 2)
    assert (cg.g_S, cg.g_Sbar, cg.g_C) == (17, 7, 7)


def test_branch_points():
    sc = SpectralCoeffs.build([Poly.from_roots([7, 3, 5], F)], F=F)
    assert branch_points(sc) == [3, 5, 7]
    F7 = Field(7)
    with pytest.raises(NotSplit):
        branch_points(SpectralCoeffs.build([Poly([1, 0, 1], F7)], F=F7))


def test_cover_models():
    sc = SpectralCoeffs.build([Poly.from_roots([1, 2], F)], F=F)
    models = cover_models(sc)
    assert models["C"].branch_points == (1, 2)
    assert set(models) == {"S", "Sbar", "C"}


def test_random_regular_is_regular_and_deterministic():
    a = random_regular_coeffs(3, random.Random(5), F=F)
    b = random_regular_coeffs(3, random.Random(5), F=F)
    assert a == b and is_regular(a)
    assert len(branch_points(a)) == a.ap.deg
