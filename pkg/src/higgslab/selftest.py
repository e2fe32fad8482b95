"""Golden corpus and reduced property suites run by ``higgslab selftest``.

Each case is a module-level function ``case(seed) -> (ok, witness)`` so that
cases can be farmed out to worker processes; results are gathered in
declaration order, which keeps reports byte-identical for a fixed seed.
"""
from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor

from . import census as cen
from .bundles import BundleMeta, QuadraticBundle
from .charclasses import (
    NormMap,
    QuadraticRefinement,
    arf_invariant,
    expected_zero_count,
    omega2_V,
    omega_classes,
    whitney_additivity_check,
    zero_count,
)
from .errors import HiggslabError, IsometryViolation, NotSplit
from .exactcore import (
    AuxPoly,
    Field,
    Mat,
    Poly,
    RatFunc,
    maximal_minors_gcd,
    poly_squarefree,
    resultant,
    saturated_kernel,
    smith_hermite_basis,
)
from .higgsmodel import (
    assemble_orth,
    cayley_symplectic,
    cayley_triple,
    kernel_quadratic,
    pushforward_trivial,
    upp_quotient,
    verify_so,
)
from .langlands import (
    EquivariantBundle,
    ExtensionData,
    admissible_extension,
    build_extension,
    compatibility_check,
    invariant_direct_image,
    round_trip_certificate,
    stack_dimension,
    torsor_sweep,
)
from .report import Report
from .serialize import to_jsonable
from .spectral import (
    SpectralCoeffs,
    branch_points,
    complete_homogeneous,
    cover_genera,
    homogeneous_from_roots,
    random_regular_coeffs,
    regularity_check,
)
from .splitbuilder import SplitSpec, b_invariant, build_split, factor_signs, frames_report, monodromy_orbit

F = Field()
z = Poly.z(F)
one = Poly.const(1, F)


def golden_sc() -> SpectralCoeffs:
    return SpectralCoeffs.build([z], F=F)


def golden_chart():
    from .bundles import BundleMeta
    return assemble_orth(BundleMeta((0, 0)), BundleMeta((0,)), Mat([[0, 1], [1, z]], F),
                         Mat([[1]], F), Mat([[z], [-1]], F))


# --- golden corpus -----------------------------------------------------------

def case_squarefree(seed):
    return poly_squarefree(z * z + z) and not poly_squarefree(z * z) and poly_squarefree(z), {}


def case_resultant(seed):
    a2 = z + 3
    r1 = resultant(AuxPoly([a2, 0, 1], F, "xi"), AuxPoly([0, 2], F, "xi"))
    r2 = resultant(AuxPoly([-z, 0, 1], F, "xi"), AuxPoly([0, 2], F, "xi"))
    c = Poly([5], F)
    r3 = resultant(AuxPoly([-c, 1], F), AuxPoly([-c, 1], F))
    return r1 == a2 * 4 and r2 == z * (-4) and not r3, {"r1": r1, "r2": r2}


def case_module_basis(seed):
    inv = RatFunc(one, z)
    B = smith_hermite_basis([[one, 0], [0, one], [inv, inv]], 2, F)
    expected = Mat([[inv, 0], [inv, 1]], F)
    return B == expected, {"basis": B}


def case_saturated_kernel(seed):
    K1 = saturated_kernel(Mat([[z, -z]], F))
    K2 = saturated_kernel(Mat([[z * z, -one]], F))
    K3 = saturated_kernel(Mat.identity(3, F))
    ok = K1 == Mat([[1], [1]], F) and K2 == Mat([[1], [z * z]], F) and K3.ncols == 0
    return ok, {"K1": K1, "K2": K2}


def case_char_poly(seed):
    A = Mat([[0, 0, z], [0, 0, -1], [-1, 0, 0]], F)
    cp = A.charpoly()
    return cp == AuxPoly([0, z, 0, 1], F), {"char_poly": cp.pretty()}


def case_regularity(seed):
    r1 = regularity_check(golden_sc()).passed
    r2 = regularity_check(SpectralCoeffs.build([z + 1, z * z], F=F)).verdict("a_p squarefree")
    r3 = regularity_check(SpectralCoeffs.build([0, z], F=F)).verdict("a_p and a_(p-1) coprime")
    return r1 and not r2 and not r3, {}


def case_newton(seed):
    sc = SpectralCoeffs.build([-(z + 1), z], F=F)
    h = complete_homogeneous(sc, 2)
    return h[1] == z + 1 and h[2] == z * z + z + 1, {"h2": h[2]}


def case_genera(seed):
    cg = cover_genera(2, 2)
    return (cg.g_S, cg.g_Sbar, cg.g_C, cg.d, cg.consistent) == (17, 7, 7, 4, True), {}


def case_not_split(seed):
    F7 = Field(7)
    sc = SpectralCoeffs.build([Poly([1, 0, 1], F7)], F=F7)
    try:
        branch_points(sc)
    except NotSplit:
        return True, {}
    return False, {}


def case_golden_chart(seed):
    H = golden_chart()
    rep = verify_so(H, golden_sc())
    return H.gamma == Mat([[-1, 0]], F) and rep.passed, {"gamma": H.gamma}


def case_cayley_chain(seed):
    sc = golden_sc()
    H = golden_chart()
    V0 = kernel_quadratic(H, sc)
    up = upp_quotient(H, sc, V0)
    ct = cayley_triple(H, sc, up)
    sp = cayley_symplectic(H, sc, up)
    ok = (V0.Q0.det().exact_div(z).deg == 0 and up.report.passed
          and ct.beta_F == Mat([[-z]], F) and sp.report.passed)
    return ok, {"beta_F": ct.beta_F}


def case_pushforward(seed):
    a1, a2 = z + 2, z * z - 1
    sc = SpectralCoeffs.build([a1, a2], F=F)
    ct = pushforward_trivial(sc)
    ok = ct.QW == Mat([[0, 1], [1, -a1]], F) and ct.beta_F.det() == a2
    return ok, {"QW": ct.QW}


def case_relative_duality(seed):
    r1, r2 = z + 5, 2 * z - 1
    a1, a2 = -(r1 + r2), r1 * r2
    sc = SpectralCoeffs.build([a1, a2], F=F)
    ct = pushforward_trivial(sc)
    ok = True
    for i in range(2):
        for j in range(2):
            e = i + j
            val = RatFunc(r1 ** e, r1 - r2) + RatFunc(r2 ** e, r2 - r1)
            ok = ok and val == RatFunc(ct.QW[i, j])
    return ok, {}


def case_direct_image(seed):
    sc = golden_sc().with_q(2)
    V0 = invariant_direct_image(EquivariantBundle.swap_model(z), sc)
    V1 = invariant_direct_image(EquivariantBundle.trivial_model(z, 1), golden_sc())
    ok = V0.Q0 == Mat.diag([2, -2 * z], F) and V1.Q0.det().exact_div(z).deg == 0
    return ok, {"Q0": V0.Q0}


def case_compatibility(seed):
    sc = golden_sc()
    ct = pushforward_trivial(sc)
    V0 = QuadraticBundle(Mat([[z]], F), BundleMeta.flat(1, -1))
    good = all(compatibility_check(ExtensionData((0,), ((s,),)), ct, V0, sc).passed for s in (1, -1))
    bad = compatibility_check(ExtensionData((0,), ((2,),)), ct, V0, sc)
    return good and not bad.verdict("isometry: Q_W(i_x, i_x) = a_(p-1)(x)"), {}


def case_golden_extension(seed):
    sc = golden_sc()
    ct = pushforward_trivial(sc)
    V0 = QuadraticBundle(Mat([[z]], F), BundleMeta.flat(1, -1))
    H = build_extension(ct, V0, ExtensionData((0,), ((-1,),)), sc)
    ok = (H.QV == Mat([[0, 1], [1, z]], F) and H.beta == Mat([[z], [-1]], F)
          and H.gamma == Mat([[-1, 0]], F))
    H2 = build_extension(ct, V0, ExtensionData((0,), ((1,),)), sc)
    ok = ok and H2.Phi.charpoly() == H.Phi.charpoly()
    try:
        build_extension(ct, V0, ExtensionData((0,), ((2,),)), sc)
        ok = False
    except IsometryViolation:
        pass
    forced = build_extension(ct, V0, ExtensionData((0,), ((2,),)), sc, force=True)
    return ok and not forced.is_unimodular, {"QV": H.QV}


def case_stack_dimension(seed):
    return stack_dimension(2, 2, 2) == 3 and stack_dimension(3, 3, 4) == 14 \
        and stack_dimension(1, 2, 5) == 0, {}


def case_split(seed):
    sc = golden_sc()
    spec = SplitSpec.all_plus(sc)
    sp, sm = factor_signs(spec)
    H = build_split(spec)
    ok = sp == z and sm == Poly.const(F.inv(F(2)), F) and H.QV == Mat([[0, 1], [1, z]], F)
    sc2 = SpectralCoeffs.build([z + 7, z * z - 1], F=F)
    spec2 = SplitSpec.from_map(sc2, {1: 1, -1: -1})
    sp2, sm2 = factor_signs(spec2)
    ok = ok and sp2 == z - 1 and sm2 * 2 == z + 1
    ok = ok and verify_so(build_split(spec2), sc2).passed and frames_report(spec2).passed
    return ok, {}


def case_b_invariant(seed):
    sc = SpectralCoeffs.build([Poly.from_roots([1, 2, 3, 4], F)], F=F)
    ok = b_invariant(SplitSpec(sc, (1, 1, 1, -1))) == 1 and b_invariant(SplitSpec(sc, (1, -1, 1, -1))) == 0
    ok = ok and len(monodromy_orbit(SplitSpec(sc, (1, 1, -1, -1)))) == 6
    return ok, {}


def case_arf(seed):
    q0 = QuadraticRefinement.from_values([0, 0])
    q1 = QuadraticRefinement.from_values([1, 1])
    return (arf_invariant(q0), zero_count(q0), arf_invariant(q1), zero_count(q1)) == (0, 3, 1, 1), {}


def case_census(seed):
    ok = cover_genera(2, 2).g_S == 17 and cen.fiber_order(cen.CensusParams(1, 2, 2)).order == 128
    ok = ok and cen.torsor_order(1, 2) == 8 and cen.maximal_sp4_counts(2).to_json()["parts"] == [16, 2, 30]
    ok = ok and cen.maximal_sp4_counts(3).total == 194
    ok = ok and all(cen.exponent_decomposition_holds(p, g) for p in range(1, 21) for g in range(2, 21))
    ok = ok and len(cen.census_grid([1, 2], [1, 2], [2, 3])) == 8
    return ok, {}


# --- reduced property suites -------------------------------------------------

def _rand_poly(rng, deg):
    return Poly([F.random(rng) for _ in range(deg + 1)], F)


def prop_saturated_kernel(seed):
    rng = random.Random(seed)
    for _ in range(15):
        n, m = rng.randint(1, 3), rng.randint(2, 4)
        A = Mat([[_rand_poly(rng, rng.randint(0, 2)) for _ in range(m)] for _ in range(n)], F)
        K = saturated_kernel(A)
        if K.ncols and (not (A @ K).is_zero() or maximal_minors_gcd(K) != one):
            return False, {"A": A}
    return True, {}


def prop_resultant_gcd(seed):
    rng = random.Random(seed)
    for _ in range(15):
        f, g = _rand_poly(rng, 3), _rand_poly(rng, 2)
        if rng.random() < 0.5:
            common = Poly([F.random(rng), 1], F)
            f, g = f * common, g * common
        fa = AuxPoly([Poly.const(c, F) for c in f.c], F)
        ga = AuxPoly([Poly.const(c, F) for c in g.c], F)
        if (not resultant(fa, ga)) != (f.gcd(g).deg > 0):
            return False, {"f": f, "g": g}
    return True, {}


def prop_newton(seed):
    rng = random.Random(seed)
    for p in range(1, 4):
        roots = [_rand_poly(rng, 1) for _ in range(p)]
        pbar = AuxPoly([one], F, "xi")
        for r in roots:
            pbar = pbar * AuxPoly([-r, one], F, "xi")
        sc = SpectralCoeffs.build([pbar.coeff(p - k) for k in range(1, p + 1)], F=F)
        h = complete_homogeneous(sc, 4)
        for u in range(5):
            ref = homogeneous_from_roots(roots, u) if u else one
            if h[u] != ref:
                return False, {"p": p, "u": u}
    return True, {}


def prop_split(seed):
    rng = random.Random(seed)
    for p in (1, 2):
        for _ in range(2):
            sc = random_regular_coeffs(p, rng, F=F, max_deg_ap=4)
            spec = SplitSpec(sc, tuple(rng.choice((1, -1)) for _ in branch_points(sc)))
            H = build_split(spec)
            if not verify_so(H, sc).passed:
                return False, {"sc": sc.to_json()}
            ct = cayley_triple(H, sc)
            V0 = kernel_quadratic(H, sc)
            if V0.rank != 1 or ct.beta_F.det() != (sc.ap if p % 2 == 0 else -sc.ap):
                return False, {"sc": sc.to_json()}
    return True, {}


def prop_compatibility(seed):
    rng = random.Random(seed)
    for _ in range(3):
        sc = random_regular_coeffs(rng.randint(1, 2), rng, F=F, max_deg_ap=3)
        ct = pushforward_trivial(sc)
        V0 = QuadraticBundle(Mat([[sc.ap]], F), BundleMeta.flat(1, -sc.p))
        ext = admissible_extension(ct, V0, sc)
        k = F.random(rng)
        while F.mul(k, k) == F.one or not k:
            k = F.random(rng)
        bad = ExtensionData(ext.D, (tuple(F.mul(k, a) for a in ext.i[0]),) + ext.i[1:])
        if compatibility_check(bad, ct, V0, sc).passed:
            return False, {"sc": sc.to_json()}
        if build_extension(ct, V0, bad, sc, force=True).is_unimodular:
            return False, {"sc": sc.to_json()}
    return True, {}


def prop_torsor(seed):
    sc = SpectralCoeffs.build([z + 3, Poly.from_roots([0, 1, 5], F)], F=F)
    ct = pushforward_trivial(sc)
    V0 = QuadraticBundle(Mat([[sc.ap]], F), BundleMeta.flat(1, -2))
    rows = torsor_sweep(ct, V0, sc)
    keys = {r[1] for r in rows}
    same = len({r[2] for r in rows}) == 1 and len({r[3] for r in rows}) == 1
    return len(keys) == 4 and same, {"classes": len(keys)}


def prop_round_trip(seed):
    rng = random.Random(seed)
    for _ in range(3):
        sc = random_regular_coeffs(1, rng, F=F, max_deg_ap=3)
        for M in (EquivariantBundle.trivial_model(sc.ap, 2), EquivariantBundle.swap_model(sc.ap, extra=1)):
            if not round_trip_certificate(M, sc.with_q(M.rank)).passed:
                return False, {"sc": sc.to_json()}
    return True, {}


def prop_gf2(seed):
    from itertools import product as iproduct
    import numpy as np
    for g in (1, 2):
        for vals in iproduct((0, 1), repeat=2 * g):
            q = QuadraticRefinement.from_values(vals)
            if zero_count(q) != expected_zero_count(g, arf_invariant(q)):
                return False, {"values": vals}
            sp = q.space
            vecs = list(sp.vectors())
            for x in vecs:
                for y in vecs:
                    if (q((x + y) % 2) + q(x) + q(y)) % 2 != sp.pair(x, y):
                        return False, {"values": vals}
    qs, qsig = QuadraticRefinement.standard(2), QuadraticRefinement.standard(1)
    Nm = NormMap.default(1, 2)
    for L in iproduct((0, 1), repeat=4):
        L = np.array(L, dtype=np.uint8)
        for w2p, delta in iproduct((0, 1), repeat=2):
            w1W, w2W = omega_classes(L, qs, qsig, Nm)
            w2V = omega2_V(L, qs, qsig, Nm, w2p, delta, q=3)
            if whitney_additivity_check(w1W, w2V, w1W, w2W) != (w2p + delta) % 2:
                return False, {"L": L.tolist()}
    return True, {}


CASES = [
    ("squarefree", case_squarefree), ("resultant", case_resultant),
    ("module basis", case_module_basis), ("saturated kernel", case_saturated_kernel),
    ("char poly", case_char_poly), ("regularity", case_regularity), ("newton", case_newton),
    ("genera", case_genera), ("not split", case_not_split), ("golden chart", case_golden_chart),
    ("cayley chain", case_cayley_chain), ("pushforward", case_pushforward),
    ("relative duality", case_relative_duality), ("direct image", case_direct_image),
    ("compatibility", case_compatibility), ("golden extension", case_golden_extension),
    ("stack dimension", case_stack_dimension), ("split", case_split),
    ("b invariant", case_b_invariant), ("arf", case_arf), ("census", case_census),
    ("property: saturated kernel", prop_saturated_kernel),
    ("property: resultant vs gcd", prop_resultant_gcd), ("property: newton", prop_newton),
    ("property: split end-to-end", prop_split), ("property: compatibility", prop_compatibility),
    ("property: torsor", prop_torsor), ("property: round trip", prop_round_trip),
    ("property: gf2", prop_gf2),
]


def _run(item):
    name, seed = item
    fn = dict(CASES)[name]
    try:
        ok, wit = fn(seed)
    except HiggslabError as exc:
        return name, False, exc.to_dict()
    return name, bool(ok), to_jsonable(wit)


def run_selftest(seed: int = 0, parallel: bool = False) -> Report:
    rep = Report("selftest")
    items = [(name, seed + k) for k, (name, _) in enumerate(CASES)]
    if parallel:
        with ProcessPoolExecutor() as pool:
            results = list(pool.map(_run, items))
    else:
        results = [_run(it) for it in items]
    for name, ok, wit in results:
        rep.check(name, ok, **wit)
    rep.add("seed", seed)
    rep.add("cases", len(CASES))
    return rep
