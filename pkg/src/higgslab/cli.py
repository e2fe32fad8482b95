"""Command-line front end: JSON scenario configs in, JSON reports out.

Usage::

    higgslab <command> [--config c.json] [--out r.json] [--seed N] [--parallel]

Exit status is 0 when every check passes, 1 when a mathematical
verification fails and 2 for malformed input.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import time
from pathlib import Path

from . import __version__
from .bundles import BundleMeta, QuadraticBundle
from .census import census_grid, to_csv
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
from .errors import HiggslabError, InputError, VerificationFailure
from .exactcore import Field, Mat
from .higgsmodel import (
    CayleyTriple,
    OrthHiggsChart,
    assemble_sp,
    cayley_symplectic,
    cayley_triple,
    check_triple,
    kernel_quadratic,
    pushforward_trivial,
    upp_quotient,
    verify_so,
    verify_sp,
)
from .langlands import (
    EquivariantBundle,
    ExtensionData,
    Summand,
    build_extension,
    compatibility_check,
    invariant_direct_image,
    local_model_check,
    round_trip_certificate,
    stability_check,
)
from .report import Report
from .selftest import run_selftest
from .serialize import dumps
from .spectral import SpectralCoeffs, branch_points, random_regular_coeffs, regularity_check
from .splitbuilder import (
    SplitSpec,
    b_invariant,
    build_split,
    factor_signs,
    frames_report,
    split_V0,
    summand_weights,
)

COMMANDS = ("construct-split", "build-extension", "verify", "cayley", "direct-image",
            "charclass", "census", "selftest")


def _need(cfg: dict, key: str):
    try:
        return cfg[key]
    except KeyError:
        raise InputError(f"config needs {key!r}") from None


def _sc(cfg: dict, F: Field) -> SpectralCoeffs:
    return SpectralCoeffs.from_json(_need(cfg, "sc"), F)


def _random_split(opts: dict, F: Field, rng: random.Random) -> SplitSpec:
    sc = random_regular_coeffs(int(opts.get("p", 1)), rng, q=int(opts.get("q", 1)),
                               g=int(opts.get("g", 2)), F=F,
                               max_deg_ap=int(opts.get("max_deg_ap", 6)),
                               max_deg=int(opts.get("max_deg", 3)))
    return SplitSpec(sc, tuple(rng.choice((1, -1)) for _ in branch_points(sc)))


def _v0(cfg: dict, sc: SpectralCoeffs, F: Field) -> QuadraticBundle:
    if "V0" in cfg:
        return QuadraticBundle.from_json(cfg["V0"], F)
    if sc.q != 1:
        raise InputError("V0 must be given when q > 1", q=sc.q)
    return split_V0(sc)


# --- command handlers ---------------------------------------------------------

def cmd_construct_split(cfg, F, seed, parallel) -> Report:
    if "random" in cfg:
        spec = _random_split(cfg["random"], F, random.Random(seed))
    else:
        spec = SplitSpec.from_json(_need(cfg, "split"), F)
    sc = spec.sc
    rep = Report("construct-split")
    rep.extend(regularity_check(sc))
    s_plus, s_minus = factor_signs(spec)
    H = build_split(spec)
    rep.extend(verify_so(H, sc))
    rep.extend(frames_report(spec))
    V0 = kernel_quadratic(H, sc)
    rep.extend(local_model_check(V0.Q0, sc))
    rep.extend(check_triple(cayley_triple(H, sc), sc))
    rep.add("split", spec)
    rep.add("s_plus", s_plus)
    rep.add("s_minus", s_minus)
    rep.add("chart", H)
    rep.add("char_poly", H.Phi.charpoly().pretty())
    rep.add("V0", V0)
    rep.add("b", b_invariant(spec))
    rep.add("summand_weights", summand_weights(spec))
    return rep


def cmd_build_extension(cfg, F, seed, parallel) -> Report:
    sc = _sc(cfg, F)
    ct = CayleyTriple.from_json(cfg["cayley"], F) if "cayley" in cfg else pushforward_trivial(sc)
    V0 = _v0(cfg, sc, F)
    ext = ExtensionData.from_json(_need(cfg, "extension"), sc)
    rep = Report("build-extension")
    rep.extend(check_triple(ct, sc))
    rep.extend(compatibility_check(ext, ct, V0, sc))
    if cfg.get("force"):
        res = build_extension(ct, V0, ext, sc, force=True)
        rep.check("Q_V polynomial", res.is_holomorphic)
        rep.check("Q_V unimodular", res.is_unimodular, QV=res.QV)
        rep.add("QV", res.QV)
        rep.add("beta", res.beta)
        rep.add("gamma", res.gamma)
        return rep
    H = build_extension(ct, V0, ext, sc)
    rep.extend(verify_so(H, sc))
    rep.add("chart", H)
    rep.add("char_poly", H.Phi.charpoly().pretty())
    return rep


def cmd_verify(cfg, F, seed, parallel) -> Report:
    sc = _sc(cfg, F)
    rep = Report("verify")
    rep.extend(regularity_check(sc))
    if "sp_chart" in cfg:
        d = cfg["sp_chart"]
        QV, QW = Mat.from_json(_need(d, "QV"), F), Mat.from_json(_need(d, "QW"), F)
        beta = Mat.from_json(_need(d, "beta"), F, ncols=QW.nrows)
        V = BundleMeta.from_json(d["V"]) if "V" in d else BundleMeta.flat(QV.nrows)
        W = BundleMeta.from_json(d["W"]) if "W" in d else BundleMeta.flat(QW.nrows)
        rep.extend(verify_sp(assemble_sp(V, W, QV, QW, beta), sc))
        return rep
    H = OrthHiggsChart.from_json(_need(cfg, "chart"), F)
    so = verify_so(H, sc)
    rep.extend(so)
    if so.passed:
        V0 = kernel_quadratic(H, sc)
        rep.extend(local_model_check(V0.Q0, sc))
        rep.add("V0", V0)
    rep.add("char_poly", H.Phi.charpoly().pretty())
    return rep


def cmd_cayley(cfg, F, seed, parallel) -> Report:
    sc = _sc(cfg, F)
    H = OrthHiggsChart.from_json(_need(cfg, "chart"), F)
    rep = Report("cayley")
    rep.extend(verify_so(H, sc))
    up = upp_quotient(H, sc)
    rep.extend(up.report)
    ct = cayley_triple(H, sc, up)
    rep.extend(check_triple(ct, sc))
    sp = cayley_symplectic(H, sc, up)
    rep.extend(sp.report)
    rep.add("cayley_triple", ct)
    rep.add("V0", kernel_quadratic(H, sc))
    rep.add("Phi_plus", up.Phi_plus)
    return rep


def _model(d: dict, sc: SpectralCoeffs) -> EquivariantBundle:
    kind = d.get("kind", "trivial")
    orient = int(d.get("orientation", 1))
    if kind == "trivial":
        return EquivariantBundle.trivial_model(sc.ap, int(d.get("q", sc.q)), d.get("degrees"), orient)
    if kind == "swap":
        return EquivariantBundle.swap_model(sc.ap, int(d.get("degree", 0)), int(d.get("extra", 0)), orient)
    if kind == "summands":
        ss = [Summand(int(s.get("degree", 0)), int(s["swap"]), int(s["partner"]), int(s.get("sign", 1)))
              for s in _need(d, "summands")]
        return EquivariantBundle.decomposable(sc.ap, ss, orient)
    raise InputError("unknown model kind", kind=kind)


def cmd_direct_image(cfg, F, seed, parallel) -> Report:
    sc = _sc(cfg, F)
    M = _model(_need(cfg, "model"), sc)
    sc = sc.with_q(M.rank)
    rep = Report("direct-image")
    rep.extend(M.validate())
    V0 = invariant_direct_image(M, sc)
    rep.extend(local_model_check(V0.Q0, sc))
    rep.extend(round_trip_certificate(M, sc))
    rep.extend(stability_check(M))
    rep.add("model", M)
    rep.add("V0", V0)
    rep.add("fiber_types", {sc.field.to_str(x): list(M.fiber_type(x)) for x in branch_points(sc)})
    return rep


def _refinement(spec, g: int) -> QuadraticRefinement:
    if spec is None or spec == "standard":
        return QuadraticRefinement.standard(g)
    q = QuadraticRefinement.from_values(spec)
    if q.U.shape[0] != 2 * g:
        raise InputError("refinement has the wrong dimension", expected=2 * g, got=int(q.U.shape[0]))
    return q


def cmd_charclass(cfg, F, seed, parallel) -> Report:
    g_sigma, g_sbar = int(_need(cfg, "g_sigma")), int(_need(cfg, "g_sbar"))
    q_sbar = _refinement(cfg.get("q_sbar"), g_sbar)
    q_sigma = _refinement(cfg.get("q_sigma"), g_sigma)
    Nm = NormMap.adjoint_of(cfg["pull"]) if "pull" in cfg else NormMap.default(g_sigma, g_sbar)
    L = _need(cfg, "L")
    w2p, delta, q = int(cfg.get("w2_V0prime", 0)), int(cfg.get("delta", 0)), int(cfg.get("q", 3))
    rep = Report("charclass")
    rep.check("norm map adjoint to pullback", Nm.adjoint_holds())
    for name, qr in (("S-bar", q_sbar), ("Sigma", q_sigma)):
        g = qr.U.shape[0] // 2
        a = arf_invariant(qr)
        rep.check(f"{name} zero count matches Arf", zero_count(qr) == expected_zero_count(g, a), arf=a)
    w1W, w2W = omega_classes(L, q_sbar, q_sigma, Nm)
    w2V = omega2_V(L, q_sbar, q_sigma, Nm, w2p, delta, q)
    total = whitney_additivity_check(w1W, w2V, w1W, w2W)
    rep.check("w2(V + W) = w2(V0') + delta", total == (w2p + delta) % 2, total=total)
    rep.add("w1", w1W)
    rep.add("w2_W", int(w2W))
    rep.add("w2_V", int(w2V))
    rep.add("w2_total", int(total))
    rep.add("arf", {"S-bar": arf_invariant(q_sbar), "Sigma": arf_invariant(q_sigma)})
    return rep


def cmd_census(cfg, F, seed, parallel) -> Report:
    def ints(key, default):
        v = cfg.get(key, default)
        return [int(x) for x in (v if isinstance(v, list) else [v])]
    rows = census_grid(ints("p", [1, 2]), ints("q", [1, 2]), ints("g", [2, 3]),
                       cfg.get("degL"), parallel)
    rep = Report("census")
    for r in rows:
        rep.check(f"p={r['p']} q={r['q']} g={r['g']} consistent", r["consistent"])
    rep.add("rows", rows)
    return rep


def cmd_selftest(cfg, F, seed, parallel) -> Report:
    return run_selftest(seed, parallel)


HANDLERS = {
    "construct-split": cmd_construct_split,
    "build-extension": cmd_build_extension,
    "verify": cmd_verify,
    "cayley": cmd_cayley,
    "direct-image": cmd_direct_image,
    "charclass": cmd_charclass,
    "census": cmd_census,
    "selftest": cmd_selftest,
}


# --- driver ---------------------------------------------------------------------

def run(command: str, config: dict, seed: int | None = None, parallel: bool = False):
    """Execute ``command``; return (envelope dict, exit code, report or None)."""
    envelope = {"command": command, "version": __version__}
    rep = None
    try:
        if not isinstance(config, dict):
            raise InputError("config must be a JSON object")
        F = Field.from_json(config["field"]) if "field" in config else Field()
        seed = int(seed if seed is not None else config.get("seed", 0))
        envelope["seed"] = seed
        envelope["field"] = F.to_json()
        rep = HANDLERS[command](config, F, seed, parallel)
        code = 0 if rep.passed else 1
    except InputError as exc:
        code, envelope["error"] = 2, exc.to_dict()
    except VerificationFailure as exc:
        code, envelope["error"] = 1, exc.to_dict()
    except HiggslabError as exc:
        code, envelope["error"] = 1, exc.to_dict()
    except (KeyError, TypeError, ValueError) as exc:
        code, envelope["error"] = 2, {"error": "InputError", "message": f"malformed config: {exc!r}"}
    if rep is not None:
        envelope["report"] = rep.to_dict()
    envelope["exit_code"] = code
    return envelope, code, rep


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="higgslab", description=__doc__.splitlines()[0])
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--config", type=Path, help="scenario JSON (optional for selftest and census)")
    ap.add_argument("--out", type=Path, help="write the full JSON report here")
    ap.add_argument("--seed", type=int, default=None, help="seed for random instances")
    ap.add_argument("--parallel", action="store_true", help="fan independent items out to processes")
    ap.add_argument("--csv", type=Path, help="census only: write the table as CSV ('-' for stdout)")
    ap.add_argument("--timing", action="store_true",
                    help="record wall time in the report (breaks byte-for-byte reproducibility)")
    return ap


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    if args.config is not None:
        try:
            config = json.loads(args.config.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            print(f"error: cannot read config: {exc}", file=sys.stderr)
            return 2
    elif args.command in ("selftest", "census"):
        config = {}
    else:
        print(f"error: {args.command} needs --config", file=sys.stderr)
        return 2

    t0 = time.perf_counter()
    envelope, code, rep = run(args.command, config, args.seed, args.parallel)
    if args.timing:
        envelope["seconds"] = round(time.perf_counter() - t0, 3)

    if args.out is not None:
        args.out.write_text(dumps(envelope))
    if args.csv is not None and rep is not None and "rows" in rep.artifacts:
        text = to_csv(rep.artifacts["rows"])
        if str(args.csv) == "-":
            sys.stdout.write(text)
        else:
            args.csv.write_text(text)

    if rep is not None:
        print(rep.summary())
    if "error" in envelope:
        err = envelope["error"]
        print(f"error: {err.get('error')}: {err.get('message')}")
        wit = err.get("witness")
        if wit:
            print(f"  witness: {json.dumps(wit, sort_keys=True)}")
    print(f"exit {code}")
    return code


if __name__ == "__main__":
    sys.exit(main())
