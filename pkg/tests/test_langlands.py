import random

import pytest

from higgslab.bundles import BundleMeta, QuadraticBundle
from higgslab.errors import (
    DeterminantMismatch,
    Indecomposable,
    InputError,
    IsometryViolation,
    KernelViolation,
    ModelUnsupported,
    TypeMismatch,
)
from higgslab.exactcore import Field, Mat, Poly
from higgslab.higgsmodel import CayleyTriple, kernel_quadratic, pushforward_trivial, verify_so
from higgslab.langlands import (
    EquivariantBundle,
    ExtensionData,
    Summand,
    admissible_extension,
    build_extension,
    canonical_tau,
    compatibility_check,
    equivariant_lift,
    extension_from_tau,
    invariant_direct_image,
    local_model_check,
    normalized_null_vector,
    round_trip_certificate,
    stability_check,
    stack_dimension,
    tau_conversion,
    torsor_sweep,
)
from higgslab.spectral import SpectralCoeffs, random_regular_coeffs
from higgslab.splitbuilder import split_V0

F = Field(1000003)
z = Poly.z(F)


def golden_inputs():
    sc = SpectralCoeffs.build([z], F=F)
    return sc, pushforward_trivial(sc), QuadraticBundle(Mat([[z]], F), BundleMeta.flat(1, -1))


def _unit_times(f: Poly, g: Poly) -> bool:
    q, r = divmod(f, g)
    return not r and bool(q) and q.deg == 0


# --- direct image and lift -----------------------------------------------------

def test_swap_model_direct_image():
    sc = SpectralCoeffs.build([z], q=2, F=F)
    M = EquivariantBundle.swap_model(z)
    assert M.validate().passed
    assert M.fiber_type(0) == (1, 1)
    V0 = invariant_direct_image(M, sc)
    assert V0.Q0 == Mat.diag([2, -2 * z], F)
    assert V0.Q0.det() == z * (-4)


def test_trivial_model_rank_one():
    sc = SpectralCoeffs.build([z], F=F)
    V0 = invariant_direct_image(EquivariantBundle.trivial_model(z, 1), sc)
    assert V0.rank == 1 and _unit_times(V0.Q0[0, 0], z)


def test_trivial_model_rank_three_local_form():
    ap = Poly.from_roots([1, 4], F)
    sc = SpectralCoeffs.build([ap], q=3, F=F)
    V0 = invariant_direct_image(EquivariantBundle.trivial_model(ap, 3), sc)
    assert local_model_check(V0.Q0, sc).passed


def test_wrong_type_rejected():
    ss = [Summand(0, k, k, 1) for k in range(2)]
    M = EquivariantBundle.decomposable(z, ss)
    with pytest.raises(TypeMismatch):
        invariant_direct_image(M, SpectralCoeffs.build([z], q=2, F=F))


def test_decomposable_validation():
    with pytest.raises(InputError):
        EquivariantBundle.decomposable(z, [Summand(0, 1, 0), Summand(0, 1, 1)])


@pytest.mark.parametrize("seed", range(8))
def test_round_trip(seed):
    rng = random.Random(seed)
    sc = random_regular_coeffs(1, rng, F=F, max_deg_ap=4)
    for M in (EquivariantBundle.trivial_model(sc.ap, 2), EquivariantBundle.swap_model(sc.ap, 2, 1)):
        rep = round_trip_certificate(M, sc.with_q(M.rank))
        assert rep.passed, rep.summary()


def test_lift_of_swap_direct_image():
    sc = SpectralCoeffs.build([z], q=2, F=F)
    V0 = QuadraticBundle(Mat.diag([2, -2 * z], F), BundleMeta.flat(2, -1))
    M = equivariant_lift(V0, sc)
    assert M.validate().passed
    assert M.fiber_type(0) == (1, 1)
    back = invariant_direct_image(M, sc)
    assert local_model_check(back.Q0, sc).passed


def test_lift_rank_one():
    sc = SpectralCoeffs.build([z], F=F)
    M = equivariant_lift(QuadraticBundle(Mat([[z]], F), BundleMeta.flat(1, -1)), sc)
    assert M.rank == 1 and M.fiber_type(0) == (0, 1)
    assert stability_check(M).passed


def test_lift_rejections():
    sc = SpectralCoeffs.build([z], F=F)
    with pytest.raises(DeterminantMismatch):
        equivariant_lift(QuadraticBundle(Mat([[z * z]], F), BundleMeta.flat(1, -1)), sc)
    const = SpectralCoeffs.build([3], F=F)
    with pytest.raises(InputError):
        equivariant_lift(QuadraticBundle(Mat([[1]], F), BundleMeta.flat(1, -1)), const)


# --- stability -----------------------------------------------------------------

@pytest.mark.parametrize("degree", [0, 1, 3])
def test_swap_model_stable(degree):
    rep = stability_check(EquivariantBundle.swap_model(z, degree))
    assert rep.passed and rep.artifacts["invariant_isotropic_count"] == 0


def test_positive_invariant_isotropic_is_unstable():
    ss = [Summand(1, 0, 1), Summand(-1, 1, 0), Summand(0, 2, 2, -1), Summand(0, 3, 3, 1)]
    rep = stability_check(EquivariantBundle.decomposable(z, ss))
    assert not rep.passed


def test_stability_needs_decomposition():
    sc = SpectralCoeffs.build([z], q=2, F=F)
    M = equivariant_lift(QuadraticBundle(Mat.diag([2, -2 * z], F), BundleMeta.flat(2, -1)), sc)
    with pytest.raises(Indecomposable):
        stability_check(M)


# --- compatibility and gluing -----------------------------------------------------

@pytest.mark.parametrize("i0", [1, -1])
def test_compatible_signs(i0):
    sc, ct, V0 = golden_inputs()
    assert compatibility_check(ExtensionData((0,), ((i0,),)), ct, V0, sc).passed


def test_scaled_vector_isometry_violation():
    sc, ct, V0 = golden_inputs()
    with pytest.raises(IsometryViolation) as exc:
        build_extension(ct, V0, ExtensionData((0,), ((2,),)), sc)
    assert exc.value.witness["x"] == 0


def test_kernel_violation():
    sc = SpectralCoeffs.build([z + 5, Poly.from_roots([1, 2], F)], F=F)
    ct, V0 = pushforward_trivial(sc), split_V0(sc)
    good = admissible_extension(ct, V0, sc)
    bad = ExtensionData(good.D, ((1, 0),) + good.i[1:])
    with pytest.raises(KernelViolation) as exc:
        build_extension(ct, V0, bad, sc)
    assert exc.value.witness["x"] == good.D[0]


def test_golden_extension_and_sign_flip():
    sc, ct, V0 = golden_inputs()
    H = build_extension(ct, V0, ExtensionData((0,), ((-1,),)), sc)
    assert H.QV == Mat([[0, 1], [1, z]], F)
    assert H.beta == Mat([[z], [-1]], F)
    assert H.gamma == Mat([[-1, 0]], F)
    H2 = build_extension(ct, V0, ExtensionData((0,), ((1,),)), sc)
    assert H2.QV == Mat([[0, -1], [-1, z]], F)
    assert H2.Phi.charpoly() == H.Phi.charpoly()


def test_forced_build_not_unimodular():
    sc, ct, V0 = golden_inputs()
    res = build_extension(ct, V0, ExtensionData((0,), ((2,),)), sc, force=True)
    assert not res.is_unimodular


def test_normalized_null_vector():
    sc, _, V0 = golden_inputs()
    n = normalized_null_vector(V0, 0, sc)
    assert F.mul(n[0], n[0]) == 1


@pytest.mark.parametrize("seed", range(6))
def test_random_admissible_builds(seed):
    rng = random.Random(seed)
    sc = random_regular_coeffs(rng.randint(1, 3), rng, F=F, max_deg_ap=5)
    ct, V0 = pushforward_trivial(sc), split_V0(sc)
    signs = [rng.choice((1, -1)) for _ in range(sc.ap.deg)]
    H = build_extension(ct, V0, admissible_extension(ct, V0, sc, signs), sc)
    assert verify_so(H, sc).passed
    assert kernel_quadratic(H, sc).rank == 1


def test_extension_json_round_trip():
    sc = SpectralCoeffs.build([z + 5, Poly.from_roots([1, 2], F)], F=F)
    ext = extension_from_tau([1, -1], sc)
    assert ExtensionData.from_json(ext.to_json(F), sc) == ext
    assert ExtensionData.from_json({"tau": [1, -1]}, sc) == ext
    with pytest.raises(InputError):
        ExtensionData.from_json({"D": ["1"]}, sc)


# --- tau data ---------------------------------------------------------------------

def test_tau_golden():
    sc, _, _ = golden_inputs()
    assert tau_conversion(ExtensionData((0,), ((1,),)), sc) == (1,)
    assert tau_conversion(ExtensionData((0,), ((-1,),)), sc) == (-1,)


@pytest.mark.parametrize("tau", [(1, -1, 1), (-1, -1, 1), (1, 1, 1)])
def test_tau_round_trip(tau):
    sc = SpectralCoeffs.build([z + 3, Poly.from_roots([0, 1, 5], F)], F=F)
    assert tau_conversion(extension_from_tau(tau, sc), sc) == tau
    assert canonical_tau(tau) == canonical_tau(tuple(-t for t in tau))
    assert canonical_tau(tau)[0] == 1


def test_tau_rejects_other_models():
    sc = SpectralCoeffs.build([z], F=F)
    ct = CayleyTriple(Mat([[-1]], F), Mat([[-z]], F), BundleMeta.flat(1))
    with pytest.raises(ModelUnsupported):
        tau_conversion(ExtensionData((0,), ((1,),)), sc, ct)


# --- torsor --------------------------------------------------------------------

def test_torsor_classes_and_parallel():
    sc = SpectralCoeffs.build([z + 3, Poly.from_roots([0, 1, 5], F)], F=F)
    ct, V0 = pushforward_trivial(sc), split_V0(sc)
    rows = torsor_sweep(ct, V0, sc)
    assert len({r[1] for r in rows}) == 4
    assert len({r[2] for r in rows}) == 1 and len({r[3] for r in rows}) == 1
    assert torsor_sweep(ct, V0, sc, parallel=True) == rows


def test_stack_dimension():
    assert stack_dimension(2, 2, 2) == 3
    assert stack_dimension(1, 2, 5) == 0
    assert stack_dimension(3, 3, 4) == 14
    with pytest.raises(InputError):
        stack_dimension(0, 2, 2)
