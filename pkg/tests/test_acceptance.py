"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run standalone with ``python3 tests/test_acceptance.py`` for just the lines.
"""
from __future__ import annotations

import random
import time
from itertools import product

import numpy as np
import pytest
import sympy

from higgslab.bundles import BundleMeta, QuadraticBundle
from higgslab.census import (
    CensusParams,
    cover_genera,
    exponent_decomposition_holds,
    fiber_order,
    maximal_sp4_counts,
    torsor_order,
)
from higgslab.charclasses import (
    NormMap,
    QuadraticRefinement,
    arf_invariant,
    omega2_V,
    omega_classes,
    standard_pairing,
    whitney_additivity_check,
    zero_count,
)
from higgslab.cli import main as cli_main
from higgslab.errors import IsometryViolation
from higgslab.exactcore import AuxPoly, Field, Mat, Poly, RatFunc
from higgslab.higgsmodel import cayley_triple, kernel_quadratic, pushforward_trivial, verify_so
from higgslab.langlands import (
    EquivariantBundle,
    ExtensionData,
    admissible_extension,
    build_extension,
    compatibility_check,
    invariant_direct_image,
    local_model_check,
    round_trip_certificate,
    stack_dimension,
    torsor_sweep,
)
from higgslab.spectral import (
    SpectralCoeffs,
    branch_points,
    complete_homogeneous,
    homogeneous_from_roots,
    random_regular_coeffs,
)
from higgslab.splitbuilder import SplitSpec, build_split, split_V0

F = Field(1000003)
z = Poly.z(F)


def _report(capsys, n: int, ok: bool, detail: str) -> None:
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}"
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)


def _unit_multiple(a: Poly, b: Poly) -> bool:
    q, r = divmod(a, b)
    return not r and bool(q) and q.deg == 0


def _sympy_charpoly(M: Mat):
    """det(eta I - M) by sympy cofactor expansion, coefficients reduced mod l."""
    zs, es = sympy.symbols("z eta")
    rows = [[sum(int(c) * zs ** k for k, c in enumerate(M[i, j].c)) for j in range(M.ncols)]
            for i in range(M.nrows)]
    A = sympy.Matrix(rows)
    det = (es * sympy.eye(M.nrows) - A).det(method="berkowitz")
    return sympy.Poly(sympy.expand(det), es, zs, modulus=F.modulus)


def _sympy_charpoly_ref():
    zs, es = sympy.symbols("z eta")
    return sympy.Poly(es ** 3 + zs * es, es, zs, modulus=F.modulus)


# --- criteria ----------------------------------------------------------------

def criterion_1():
    t0 = time.perf_counter()
    sc = SpectralCoeffs.build([z], F=F)
    ct = pushforward_trivial(sc)
    V0 = QuadraticBundle(Mat([[z]], F), BundleMeta.flat(1, -1))
    H = build_extension(ct, V0, ExtensionData((0,), ((-1,),)), sc)
    dt = time.perf_counter() - t0
    eta = AuxPoly([0, 1], F)
    ok = (H.QV == Mat([[0, 1], [1, z]], F) and H.beta == Mat([[z], [-1]], F)
          and H.gamma == Mat([[-1, 0]], F)
          and H.Phi.charpoly() == eta * (eta * eta + AuxPoly([z], F))
          and _sympy_charpoly(H.Phi) == _sympy_charpoly_ref()
          and dt < 1.0)
    return ok, f"golden chart reproduced in {dt:.3f}s"


def criterion_2():
    rng = random.Random(20)
    t0 = time.perf_counter()
    bad = []
    for p in (1, 2, 3):
        for k in range(20):
            sc = random_regular_coeffs(p, rng, F=F, max_deg_ap=8)
            spec = SplitSpec(sc, tuple(rng.choice((1, -1)) for _ in branch_points(sc)))
            H = build_split(spec)
            eta = AuxPoly([0, 1], F)
            V0 = kernel_quadratic(H, sc)
            ct = cayley_triple(H, sc)
            sign = 1 if p % 2 == 0 else -1
            ok = (verify_so(H, sc).passed
                  and H.Phi.charpoly() == eta * sc.s_poly()
                  and V0.rank == 1 and _unit_multiple(V0.Q0[0, 0], sc.ap)
                  and V0.meta.twist == -p
                  and ct.beta_F.det() == sc.ap.scale(sign))
            if not ok:
                bad.append((p, k))
    dt = time.perf_counter() - t0
    return not bad and dt < 30.0, f"60 split instances, failures={bad}, {dt:.1f}s"


def _rel_duality_oracle(roots, i, j):
    """sum_k r_k^(i+j) / pbar'(r_k) as a rational function of z."""
    total = RatFunc(Poly.zero_like(z))
    for k, r in enumerate(roots):
        den = Poly.const(1, F)
        for m, s in enumerate(roots):
            if m != k:
                den = den * (r - s)
        total = total + RatFunc(r ** (i + j), den)
    return total


def criterion_3():
    rng = random.Random(3)
    one = Poly.const(1, F)
    newton_ok = duality_ok = True
    for p in range(1, 5):
        for _ in range(3):
            roots = [Poly([F.random(rng), F.random(rng)], F) for _ in range(p)]
            pbar = AuxPoly([one], F, "xi")
            for r in roots:
                pbar = pbar * AuxPoly([-r, one], F, "xi")
            a = [pbar.coeff(p - k) for k in range(1, p + 1)]
            if not a[-1]:
                continue
            sc = SpectralCoeffs.build(a, F=F)
            h = complete_homogeneous(sc, 2 * p)
            newton_ok &= all(h[u] == (homogeneous_from_roots(roots, u) if u else one)
                             for u in range(2 * p + 1))
            if p <= 3:
                # distinct roots so the oracle denominators are nonzero
                if len({r.c for r in roots}) < p:
                    continue
                QW = pushforward_trivial(sc).QW
                duality_ok &= all(RatFunc(QW[i, j]) == _rel_duality_oracle(roots, i, j)
                                  for i in range(p) for j in range(p))
    return newton_ok and duality_ok, f"newton={newton_ok} relative duality={duality_ok}"


def criterion_4():
    rng = random.Random(4)
    false_accept = false_reject = 0
    for _ in range(20):
        sc = random_regular_coeffs(rng.randint(1, 2), rng, F=F, max_deg_ap=4)
        ct, V0 = pushforward_trivial(sc), split_V0(sc)
        ext = admissible_extension(ct, V0, sc)
        if not compatibility_check(ext, ct, V0, sc).passed:
            false_reject += 1
        k = 0
        while k in (0, 1, F.modulus - 1):
            k = F.random(rng)
        j = rng.randrange(len(ext.D))
        vecs = list(ext.i)
        vecs[j] = tuple(F.mul(k, c) for c in vecs[j])
        bad = ExtensionData(ext.D, tuple(vecs))
        try:
            build_extension(ct, V0, bad, sc)
            false_accept += 1
        except IsometryViolation as exc:
            if exc.witness.get("x") != ext.D[j]:
                false_accept += 1
        if build_extension(ct, V0, bad, sc, force=True).is_unimodular:
            false_accept += 1
    ok = false_accept == 0 and false_reject == 0
    return ok, f"20 instances, false accepts={false_accept}, false rejects={false_reject}"


def criterion_5():
    sc = SpectralCoeffs.build([z + 11, Poly.from_roots([2, 5, 9], F, lead=3)], F=F)
    ct, V0 = pushforward_trivial(sc), split_V0(sc)
    rows = torsor_sweep(ct, V0, sc)
    keys = {r[1] for r in rows}
    by_signs = {r[0]: r[1] for r in rows}
    flip_ok = all(by_signs[s] == by_signs[tuple(-e for e in s)] for s in by_signs)
    same = len({r[2] for r in rows}) == 1 and len({r[3] for r in rows}) == 1
    ok = len(rows) == 8 and len(keys) == 4 and flip_ok and same
    return ok, f"{len(rows)} sign choices, {len(keys)} classes, flip-invariant={flip_ok}, shared data={same}"


def criterion_6():
    cg = cover_genera(2, 2)
    fo = fiber_order(CensusParams(1, 2, 2))
    gc = maximal_sp4_counts(2)
    checks = {
        "genera": (cg.g_S, cg.g_Sbar) == (17, 7),
        "fiber": fo.order == 128 and all(
            fiber_order(CensusParams(p, 2, g)).order == 2 ** ((4 * p * p + 2 * p) * (g - 1) + 1)
            for p in range(1, 6) for g in range(2, 6)),
        "torsor": torsor_order(1, 2) == 8,
        "stack": stack_dimension(2, 2, 2) == 3,
        "sp4 components": gc.total == 48 and gc.to_json()["parts"] == [16, 2, 30],
        "decomposition": all(exponent_decomposition_holds(p, g)
                             for p in range(1, 21) for g in range(2, 21)),
    }
    failed = [k for k, v in checks.items() if not v]
    return not failed, f"failed={failed}"


def criterion_7():
    rng = random.Random(7)
    n = fails = 0
    for _ in range(50):
        sc = random_regular_coeffs(1, rng, F=F, max_deg_ap=5)
        models = [EquivariantBundle.trivial_model(sc.ap, q) for q in (1, 2, 3)]
        models += [EquivariantBundle.swap_model(sc.ap, 0, 0), EquivariantBundle.swap_model(sc.ap, 1, 1)]
        for M in models:
            scq = sc.with_q(M.rank)
            n += 1
            V0 = invariant_direct_image(M, scq)
            if not (round_trip_certificate(M, scq).passed and local_model_check(V0.Q0, scq).passed):
                fails += 1
    return fails == 0, f"{n} model instances over 50 random a_p, failures={fails}"


def _q_oracle(U: np.ndarray, x) -> int:
    n = len(x)
    return sum(int(U[i, j]) * x[i] * x[j] for i in range(n) for j in range(i, n)) % 2


def criterion_8():
    polar = zeros = True
    for g in (1, 2, 3):
        J = standard_pairing(g).astype(int)
        vecs = np.array(list(product((0, 1), repeat=2 * g)), dtype=int)
        pair = (vecs @ J @ vecs.T) % 2
        idx = {tuple(v): k for k, v in enumerate(vecs)}
        sums = np.array([[idx[tuple((a + b) % 2)] for b in vecs] for a in vecs])
        for vals in product((0, 1), repeat=2 * g):
            q = QuadraticRefinement.from_values(vals)
            qv = np.array([q(v) for v in vecs], dtype=int)
            polar &= bool(np.all((qv[sums] + qv[:, None] + qv[None, :]) % 2 == pair))
            expected = 2 ** (2 * g - 1) + (1 - 2 * arf_invariant(q)) * 2 ** (g - 1)
            zeros &= zero_count(q) == expected == int(np.sum(qv == 0))
    whitney = True
    count = 0
    for g_sig in (1, 2):
        for g_bar in range(g_sig, 3):
            Nm = NormMap.default(g_sig, g_bar)
            for vb, vs in product(product((0, 1), repeat=2 * g_bar), product((0, 1), repeat=2 * g_sig)):
                qb, qs = QuadraticRefinement.from_values(vb), QuadraticRefinement.from_values(vs)
                for L in product((0, 1), repeat=2 * g_bar):
                    w1, w2W = omega_classes(L, qb, qs, Nm)
                    nmL = [int(sum(int(Nm.matrix[i, j]) * L[j] for j in range(len(L))) % 2)
                           for i in range(2 * g_sig)]
                    ok = list(w1) == nmL and w2W == (_q_oracle(qb.U, L) + _q_oracle(qs.U, nmL)) % 2
                    for w2p, delta in product((0, 1), repeat=2):
                        w2V = omega2_V(L, qb, qs, Nm, w2p, delta, q=3)
                        ok &= w2V == (w2W + w2p + delta) % 2
                        ok &= whitney_additivity_check(w1, w2V, w1, w2W) == (w2p + delta) % 2
                        count += 1
                    whitney &= bool(ok)
    ok = polar and zeros and whitney
    return ok, f"polarization={polar} zero counts={zeros} w2 identity={whitney} ({count} inputs)"


def criterion_9(tmp_dir):
    outs = []
    for k in range(2):
        path = tmp_dir / f"selftest_{k}.json"
        code = cli_main(["selftest", "--seed", "9", "--out", str(path)])
        outs.append((code, path.read_bytes()))
    ok = outs[0][0] == 0 and outs[0] == outs[1]
    return ok, f"exit codes {outs[0][0]},{outs[1][0]}, identical bytes={outs[0][1] == outs[1][1]}"


# --- pytest wrappers -------------------------------------------------------------

@pytest.mark.parametrize("n", range(1, 9))
def test_criterion(n, capsys):
    ok, detail = globals()[f"criterion_{n}"]()
    _report(capsys, n, ok, detail)
    assert ok, detail


def test_criterion_9_determinism(tmp_path, capsys):
    ok, detail = criterion_9(tmp_path)
    _report(capsys, 9, ok, detail)
    assert ok, detail


if __name__ == "__main__":
    import tempfile
    from contextlib import redirect_stdout
    from io import StringIO
    from pathlib import Path

    for n in range(1, 9):
        _report(None, n, *globals()[f"criterion_{n}"]())
    with tempfile.TemporaryDirectory() as d, redirect_stdout(StringIO()):
        res = criterion_9(Path(d))
    _report(None, 9, *res)
