"""Explicit SO(p+1,p) chart bundles from a sign on each zero of a_p.

A sign assignment splits the zeros D of a_p into D+ and D-, giving
s+ = prod_(D+) (z - x) and s- = (lc(a_p)/2) prod_(D-) (z - x) with
s+ s- = a_p / 2.  The chart bundle is glued from the trivial-bundle Cayley
model and V0 = (a_p) with i_x = -e_x (a_(p-1), ..., a_1, 1)(x); the sign
convention makes the all-plus choice on a_1 = z produce
Q_V = [[0, 1], [1, z]], beta = (z, -1).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .bundles import BundleMeta, QuadraticBundle
from .errors import InputError, ParityError, ShapeMismatch, VerificationFailure
from .exactcore import DEFAULT_FIELD, Field, Mat, Poly, RatFunc, smith_hermite_basis
from .higgsmodel import OrthHiggsChart, hankel_form, pushforward_trivial
from .langlands import ExtensionData, build_extension, extension_from_tau, extension_raw
from .spectral import SpectralCoeffs, branch_points


@dataclass(frozen=True)
class SplitSpec:
    sc: SpectralCoeffs
    signs: tuple

    def __post_init__(self):
        if self.sc.q != 1:
            raise InputError("split construction needs q = 1", q=self.sc.q)
        if len(self.signs) != len(self.D):
            raise ShapeMismatch("one sign per zero of a_p", signs=len(self.signs), D=len(self.D))
        if any(s not in (1, -1) for s in self.signs):
            raise InputError("signs must be +-1")

    @property
    def D(self) -> tuple:
        return tuple(branch_points(self.sc))

    @property
    def D_plus(self) -> tuple:
        return tuple(x for x, s in zip(self.D, self.signs) if s > 0)

    @property
    def D_minus(self) -> tuple:
        return tuple(x for x, s in zip(self.D, self.signs) if s < 0)

    def flipped(self) -> "SplitSpec":
        return SplitSpec(self.sc, tuple(-s for s in self.signs))

    @classmethod
    def from_map(cls, sc: SpectralCoeffs, signs: dict) -> "SplitSpec":
        F = sc.field
        table = {F(k) if not isinstance(k, str) else F.from_str(k): int(v) for k, v in signs.items()}
        pts = branch_points(sc)
        missing = [x for x in pts if x not in table]
        if missing:
            raise InputError("sign missing for some zero of a_p", missing=missing)
        return cls(sc, tuple(table[x] for x in pts))

    @classmethod
    def all_plus(cls, sc: SpectralCoeffs) -> "SplitSpec":
        return cls(sc, (1,) * len(branch_points(sc)))

    def to_json(self) -> dict:
        F = self.sc.field
        return {"sc": self.sc.to_json(),
                "signs": {F.to_str(x): f"{s:+d}" for x, s in zip(self.D, self.signs)}}

    @classmethod
    def from_json(cls, data: dict, F: Field = DEFAULT_FIELD) -> "SplitSpec":
        sc = SpectralCoeffs.from_json(data["sc"], F)
        signs = data.get("signs")
        if signs is None or signs == "all-plus":
            return cls.all_plus(sc)
        if isinstance(signs, list):
            return cls(sc, tuple(int(s) for s in signs))
        return cls.from_map(sc, signs)


def factor_signs(spec: SplitSpec):
    """(s+, s-) with s+ monic on D+, s- carrying lc(a_p)/2, and s+ s- = a_p/2."""
    sc, F = spec.sc, spec.sc.field
    s_plus = Poly.from_roots(spec.D_plus, F)
    s_minus = Poly.from_roots(spec.D_minus, F, lead=F.div(sc.ap.lc, F(2)))
    if s_plus * s_minus * 2 != sc.ap:
        raise VerificationFailure("s+ s- differs from a_p/2")
    return s_plus, s_minus


def split_extension(spec: SplitSpec) -> ExtensionData:
    """Gluing vectors i_x = -e_x u_x for the trivial-bundle model."""
    return extension_from_tau([-s for s in spec.signs], spec.sc)


def split_V0(sc: SpectralCoeffs) -> QuadraticBundle:
    return QuadraticBundle(Mat([[sc.ap]], sc.field), BundleMeta((Fraction(-sc.p),)))


def summand_weights(spec: SplitSpec):
    """K-weights of W = K^(p-1) + ... + K^-(p-1) and V = W0 + B + B*.

    The chart stands in for K^(2p) by a_p, so a point of D carries weight
    2p/|D| and B = K^-p(D+) has weight -p + 2p |D+|/|D|.
    """
    p = spec.sc.p
    nD = len(spec.D)
    W = BundleMeta(tuple(p + 1 - 2 * i for i in range(1, p + 1)))
    b = Fraction(-p) + Fraction(2 * p * len(spec.D_plus), nD)
    V = BundleMeta(tuple(p - 2 * i for i in range(1, p)) + (b, -b))
    return W, V


def build_split(spec: SplitSpec) -> OrthHiggsChart:
    """The SO(p+1,p) chart bundle attached to the sign assignment."""
    sc = spec.sc
    factor_signs(spec)
    ct = pushforward_trivial(sc)
    H = build_extension(ct, split_V0(sc), split_extension(spec), sc)
    W, V = summand_weights(spec)
    if V.rank != H.V.rank or W.rank != H.W.rank:
        raise VerificationFailure("summand ranks disagree with the chart")
    if V.det_weight != H.V.det_weight or W.det_weight != H.W.det_weight:
        raise VerificationFailure("summand determinant weights disagree with the chart",
                                  V=(V.det_weight, H.V.det_weight), W=(W.det_weight, H.W.det_weight))
    return OrthHiggsChart(V, W, H.QV, H.QW, H.beta, H.gamma)


# --- the explicit frames -----------------------------------------------------

def psi_matrix(sc: SpectralCoeffs) -> Mat:
    """psi(v) = v + v_p (a_(p-1), ..., a_1, 0), a unimodular automorphism."""
    p, F = sc.p, sc.field
    rows = [[Poly.const(1 if i == j else 0, F) for j in range(p)] for i in range(p)]
    for i in range(p - 1):
        rows[i][p - 1] = sc.coeff(p - 1 - i)
    return Mat(rows, F, ncols=p)


def w0_form(sc: SpectralCoeffs) -> Mat:
    """Q_W0(v_i, v_j) = h_(i+j-p) for i+j >= p, else 0 (rank p-1)."""
    return hankel_form(sc, sc.p - 1, sc.p)


@dataclass(frozen=True)
class SplitFrames:
    T: Mat
    QV: Mat
    beta: Mat
    gamma: Mat
    s_plus: Poly
    s_minus: Poly


def split_frames(spec: SplitSpec) -> SplitFrames:
    """Summand-adapted frame of V inside V' = W K^-1 + V0 and the maps in it.

    Columns of T: (e_i, 0) for i < p, then (u, 1)/(2 s+) and (-u, 1)/(2 s-)
    with u = (a_(p-1), ..., a_1, 1).  In this frame Q_V = Q_W0 + hyperbolic
    plane, beta(w) = (w_i - w_p a_(p-i), w_p s+, -w_p s-) and
    gamma(v, g, h) = (s+ h - s- g, v_1, ..., v_(p-1)).
    """
    sc, F = spec.sc, spec.sc.field
    p = sc.p
    sp, sm = factor_signs(spec)
    zero, one = Poly((), F), Poly.const(1, F)
    u = [sc.coeff(p - 1 - k) for k in range(p)]
    cols = []
    for i in range(p - 1):
        cols.append([RatFunc(one if k == i else zero) for k in range(p + 1)])
    for sgn, s in ((1, sp), (-1, sm)):
        d = RatFunc(one, s * 2)
        cols.append([RatFunc(a * sgn) * d for a in u] + [d])
    T = Mat.from_columns(cols, p + 1, F)
    QV = Mat.blockdiag(w0_form(sc), Mat([[0, 1], [1, 0]], F)) if p > 1 else Mat([[0, 1], [1, 0]], F)
    beta_rows = [[one if j == i else (-sc.coeff(p - 1 - i) if j == p - 1 else zero) for j in range(p)]
                 for i in range(p - 1)]
    beta_rows.append([zero] * (p - 1) + [sp])
    beta_rows.append([zero] * (p - 1) + [-sm])
    gamma_rows = [[zero] * (p - 1) + [-sm, sp]]
    for i in range(p - 1):
        gamma_rows.append([one if j == i else zero for j in range(p - 1)] + [zero, zero])
    return SplitFrames(T, QV, Mat(beta_rows, F, ncols=p), Mat(gamma_rows, F, ncols=p + 1), sp, sm)


def frames_report(spec: SplitSpec):
    """Check the explicit frames against the normal-form construction."""
    from .report import Report

    sc, F = spec.sc, spec.sc.field
    p = sc.p
    fr = split_frames(spec)
    ct = pushforward_trivial(sc)
    rep = Report("split frames")
    QVp = Mat.blockdiag(ct.QW @ ct.beta_F, Mat([[sc.ap]], F)).rational()
    rep.check("T^T Q_V' T is Q_W0 + hyperbolic", fr.T.T @ QVp @ fr.T == fr.QV.rational())
    inc = Mat.block([[Mat.identity(p, F)], [Mat.zeros(1, p, F)]], F).rational()
    rep.check("beta in the frame", fr.T.inverse().rational() @ inc == fr.beta.rational())
    bF0 = ct.beta_F.hstack(Mat.zeros(p, 1, F)).rational()
    rep.check("gamma in the frame", bF0 @ fr.T == fr.gamma.rational())
    raw = extension_raw(ct, split_V0(sc), split_extension(spec), sc)
    rep.check("frame spans the glued lattice",
              smith_hermite_basis(fr.T.columns(), p + 1, F) == raw.basis)
    psi = psi_matrix(sc)
    pulled = psi.T @ ct.QW @ ct.beta_F @ psi
    target = Mat.blockdiag(w0_form(sc), Mat([[-sc.ap]], F)) if p > 1 else Mat([[-sc.ap]], F)
    rep.check("psi pulls Q_W beta_F back to Q_W0 + (-a_p)", pulled == target)
    rep.check("psi unimodular", psi.is_unimodular())
    return rep


def literal_form(spec: SplitSpec) -> Mat:
    """Q_W0 + [[0, a_p/2], [a_p/2, 0]]: the Gram matrix of the unnormalized frame."""
    sc, F = spec.sc, spec.sc.field
    half = sc.ap.scale(F.inv(F(2)))
    hyp = Mat([[0, half], [half, 0]], F)
    return Mat.blockdiag(w0_form(sc), hyp) if sc.p > 1 else hyp


# --- invariants ----------------------------------------------------------------

def b_invariant(spec: SplitSpec, census: bool = False):
    """b = (b+ - b-)/2 after ordering so that b+ >= b-."""
    bp, bm = len(spec.D_plus), len(spec.D_minus)
    bp, bm = max(bp, bm), min(bp, bm)
    if census:
        sc = spec.sc
        target = 4 * sc.p * (sc.g - 1)
        if bp + bm != target:
            raise InputError("census mode needs |D| = 4p(g-1)", D=bp + bm, expected=target)
        if (bp - bm) % 2:
            raise ParityError("b+ - b- is odd", b_plus=bp, b_minus=bm)
        b = (bp - bm) // 2
        if not 0 <= b <= 2 * sc.p * (sc.g - 1):
            raise VerificationFailure("b out of range", b=b)
        return b
    return (bp - bm) // 2 if (bp - bm) % 2 == 0 else Fraction(bp - bm, 2)


def monodromy_apply(spec: SplitSpec, perm) -> SplitSpec:
    """Move the sign at position k to position perm[k]."""
    perm = list(perm)
    n = len(spec.signs)
    if sorted(perm) != list(range(n)):
        raise InputError("not a permutation of the branch points", perm=perm)
    new = [0] * n
    for k, s in enumerate(spec.signs):
        new[perm[k]] = s
    out = SplitSpec(spec.sc, tuple(new))
    if b_invariant(out) != b_invariant(spec):
        raise VerificationFailure("b changed under monodromy")
    return out


def monodromy_orbit(spec: SplitSpec, generators=None) -> set:
    """Sign vectors reachable under the group generated by ``generators``.

    The default generators, a transposition and a full cycle, generate the
    whole symmetric group.
    """
    n = len(spec.signs)
    if generators is None:
        generators = []
        if n >= 2:
            generators.append([1, 0] + list(range(2, n)))
            generators.append([(k + 1) % n for k in range(n)])
    seen = {spec.signs}
    queue = deque([spec])
    while queue:
        cur = queue.popleft()
        for g in generators:
            nxt = monodromy_apply(cur, g)
            if nxt.signs not in seen:
                seen.add(nxt.signs)
                queue.append(nxt)
    return seen
