"""Orthogonal and symplectic Higgs chart data and the Cayley chain.

A chart Higgs bundle is (V, W, Q_V, Q_W, beta, gamma) with beta: W -> V and
gamma: V -> W the orthogonal transpose, Q_W gamma = beta^T Q_V.  The Higgs
field on E = V + W is Phi = [[0, beta], [gamma, 0]].  The Cayley chain passes
to the quotient V/ker(gamma), then to the K^2-twisted triple (W, Q_W, beta_F)
with beta_F = gamma_+ beta_+.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bundles import BundleMeta, QuadraticBundle
from .errors import (
    DeterminantMismatch,
    GammaPlusNotIso,
    InputError,
    NonSymmetricForm,
    NonUnimodularForm,
    RankMismatch,
    ShapeMismatch,
    VerificationFailure,
)
from .exactcore import DEFAULT_FIELD, AuxPoly, Field, Mat, Poly, completion, saturated_kernel
from .report import Report
from .spectral import SpectralCoeffs, char_poly_model, complete_homogeneous


# --- forms ----------------------------------------------------------------

def _require_form(Q: Mat, name: str, skew: bool = False) -> None:
    if not Q.is_square():
        raise ShapeMismatch(f"{name} must be square", shape=Q.shape)
    ok = Q.is_skew() if skew else Q.is_symmetric()
    if not ok:
        raise NonSymmetricForm(f"{name} is not {'skew-' if skew else ''}symmetric", form=name)
    if not Q.is_unimodular():
        det = Q.det() if Q.is_polynomial() else None
        raise NonUnimodularForm(f"{name} is not unimodular", form=name, det=det)


def orth_transpose(QV: Mat, QW: Mat, beta: Mat) -> Mat:
    """gamma with Q_W gamma = beta^T Q_V (valid for symmetric and skew forms)."""
    return QW.inverse() @ beta.T @ QV


def _higgs_field(beta: Mat, gamma: Mat) -> Mat:
    return Mat.block([[None, beta], [gamma, None]], beta.F)


# --- orthogonal charts ------------------------------------------------------

@dataclass(frozen=True)
class OrthHiggsChart:
    V: BundleMeta
    W: BundleMeta
    QV: Mat
    QW: Mat
    beta: Mat
    gamma: Mat

    @property
    def p(self) -> int:
        return self.QW.nrows

    @property
    def q(self) -> int:
        return self.QV.nrows - self.QW.nrows

    @property
    def field(self) -> Field:
        return self.QV.F

    @property
    def Phi(self) -> Mat:
        return _higgs_field(self.beta, self.gamma)

    @property
    def form_E(self) -> Mat:
        """Gram matrix of Q_V(x, x') - Q_W(y, y') on E = V + W."""
        return Mat.blockdiag(self.QV, -self.QW)

    def to_json(self) -> dict:
        return {"V": self.V.to_json(), "W": self.W.to_json(), "QV": self.QV.to_json(),
                "QW": self.QW.to_json(), "beta": self.beta.to_json(),
                "gamma": self.gamma.to_json()}

    @classmethod
    def from_json(cls, data: dict, F: Field = DEFAULT_FIELD) -> "OrthHiggsChart":
        try:
            QV, QW = Mat.from_json(data["QV"], F), Mat.from_json(data["QW"], F)
            beta = Mat.from_json(data["beta"], F, ncols=QW.nrows)
        except KeyError as exc:
            raise InputError("chart needs QV, QW and beta", missing=str(exc)) from exc
        V = BundleMeta.from_json(data["V"]) if "V" in data else BundleMeta.flat(QV.nrows)
        W = BundleMeta.from_json(data["W"]) if "W" in data else BundleMeta.flat(QW.nrows)
        return assemble_orth(V, W, QV, QW, beta)


def assemble_orth(V_meta: BundleMeta, W_meta: BundleMeta, QV: Mat, QW: Mat,
                  beta: Mat) -> OrthHiggsChart:
    """Validate the forms, derive gamma from the transpose identity and build the chart."""
    n, p = QV.nrows, QW.nrows
    if beta.shape != (n, p):
        raise ShapeMismatch("beta must be rank(V) x rank(W)", beta=beta.shape, V=n, W=p)
    if V_meta.rank != n or W_meta.rank != p:
        raise ShapeMismatch("weight lists disagree with the forms",
                            V=(V_meta.rank, n), W=(W_meta.rank, p))
    _require_form(QV, "Q_V")
    _require_form(QW, "Q_W")
    gamma = orth_transpose(QV, QW, beta.polynomial())
    if not gamma.is_polynomial():
        raise VerificationFailure("gamma is not polynomial")
    return OrthHiggsChart(V_meta, W_meta, QV.polynomial(), QW.polynomial(),
                          beta.polynomial(), gamma.polynomial())


def verify_so(H: OrthHiggsChart, sc: SpectralCoeffs) -> Report:
    """Skewness, characteristic polynomial, involution and determinant weights."""
    rep = Report("verify_so")
    if sc.p != H.p or sc.q != H.q:
        rep.check("ranks match spectral data", False, chart=(H.p, H.q), coeffs=(sc.p, sc.q))
        return rep
    G, Phi = H.form_E, H.Phi
    defect = Phi.T @ G + G @ Phi
    rep.check("Phi skew-adjoint for Q_V - Q_W", defect.is_zero(), defect=defect)
    rep.check("Q_W gamma = beta^T Q_V", H.QW @ H.gamma == H.beta.T @ H.QV)
    cp, model = Phi.charpoly(), char_poly_model(sc)
    rep.check("char poly of Phi matches model", cp == model, got=cp.pretty(), expected=model.pretty())
    f = Mat.diag([1] * (H.p + H.q) + [-1] * H.p, H.field)
    rep.check("diag(1_V, -1_W) conjugates Phi to -Phi", f @ Phi @ f == -Phi)
    rep.check("det V weight equals det W weight", H.V.det_weight == H.W.det_weight,
              det_V=H.V.det_weight, det_W=H.W.det_weight)
    rep.add("char_poly", cp)
    return rep


def kernel_quadratic(H: OrthHiggsChart, sc: SpectralCoeffs) -> QuadraticBundle:
    """V0 = ker(gamma) as a saturated subbundle, with Q0 the restriction of Q_V."""
    K = saturated_kernel(H.gamma)
    if K.ncols != H.q or H.q == 0:
        raise RankMismatch("ker(gamma) has the wrong rank", expected=H.q, got=K.ncols)
    Q0 = K.T @ H.QV @ K
    det = Q0.det()
    quo, rem = divmod(det, sc.ap)
    if rem or not quo or quo.deg != 0:
        raise DeterminantMismatch("det(Q0) is not a unit times a_p", det=det, a_p=sc.ap)
    twist = H.V.det_weight - H.W.det_weight - H.p
    if twist != -H.p:
        raise DeterminantMismatch("det(V0) weight must be -p", weight=twist, p=H.p)
    return QuadraticBundle(Q0, BundleMeta.flat(H.q, twist), K)


# --- the quotient V/V0 -----------------------------------------------------

@dataclass(frozen=True)
class UppQuotient:
    V1_basis: Mat
    beta_plus: Mat
    gamma_plus: Mat
    report: Report

    @property
    def Phi_plus(self) -> Mat:
        return _higgs_field(self.beta_plus, self.gamma_plus)


def upp_quotient(H: OrthHiggsChart, sc: SpectralCoeffs, V0: QuadraticBundle | None = None) -> UppQuotient:
    """Induced maps on V1 = V/V0 using a unimodular completion of the kernel basis."""
    if V0 is None:
        V0 = kernel_quadratic(H, sc)
    K = V0.basis if V0.basis is not None else saturated_kernel(H.gamma)
    q, n = K.ncols, K.nrows
    P, Pinv = completion(K)
    C = P.submatrix(range(n), range(q, n))
    gamma_plus = H.gamma @ C
    beta_plus = (Pinv @ H.beta).submatrix(range(q, n), range(H.p))
    det = gamma_plus.det()
    if not det or det.deg != 0:
        raise GammaPlusNotIso("gamma_+ is not an isomorphism", det=det)
    rep = Report("upp_quotient")
    rep.check("gamma_+ unimodular", True)
    cp, model = _higgs_field(beta_plus, gamma_plus).charpoly(), sc.s_poly()
    rep.check("char poly of Phi_+ is the S polynomial", cp == model,
              got=cp.pretty(), expected=model.pretty())
    return UppQuotient(C, beta_plus, gamma_plus, rep)


# --- Cayley data -----------------------------------------------------------

@dataclass(frozen=True)
class CayleyTriple:
    QW: Mat
    beta_F: Mat
    W: BundleMeta

    @property
    def p(self) -> int:
        return self.QW.nrows

    def to_json(self) -> dict:
        return {"QW": self.QW.to_json(), "beta_F": self.beta_F.to_json(), "W": self.W.to_json()}

    @classmethod
    def from_json(cls, data: dict, F: Field = DEFAULT_FIELD) -> "CayleyTriple":
        QW = Mat.from_json(data["QW"], F)
        W = BundleMeta.from_json(data["W"]) if "W" in data else BundleMeta.flat(QW.nrows)
        return cls(QW, Mat.from_json(data["beta_F"], F), W)


def check_triple(ct: CayleyTriple, sc: SpectralCoeffs) -> Report:
    rep = Report("cayley_triple")
    rep.check("Q_W symmetric", ct.QW.is_symmetric())
    rep.check("Q_W unimodular", ct.QW.is_unimodular())
    S = ct.QW @ ct.beta_F
    rep.check("Q_W beta_F symmetric", S.is_symmetric())
    det = ct.beta_F.det()
    expected = sc.ap if sc.p % 2 == 0 else -sc.ap
    rep.check("det(beta_F) = (-1)^p a_p", det == expected, det=det, expected=expected)
    cp = ct.beta_F.charpoly("xi")
    rep.check("char poly of beta_F is the S-bar polynomial", cp == sc.sbar_poly(),
              got=cp.pretty())
    return rep


def cayley_triple(H: OrthHiggsChart, sc: SpectralCoeffs, up: UppQuotient | None = None) -> CayleyTriple:
    """beta_F = gamma_+ beta_+ on W, with every triple invariant verified."""
    up = up or upp_quotient(H, sc)
    ct = CayleyTriple(H.QW, up.gamma_plus @ up.beta_plus, H.W)
    rep = check_triple(ct, sc)
    if not rep.passed:
        raise VerificationFailure("Cayley triple invariants fail",
                                  failed=[c.name for c in rep.failures])
    return ct


@dataclass(frozen=True)
class SpCayley:
    F_weights: BundleMeta
    Phi_F: Mat
    omega_F: Mat
    report: Report


def cayley_symplectic(H: OrthHiggsChart, sc: SpectralCoeffs, up: UppQuotient | None = None) -> SpCayley:
    """The Sp(2p,R)-type pair F = W K^(1/2) + W K^(-1/2) with Phi_F = [[0, beta_F], [1, 0]]."""
    up = up or upp_quotient(H, sc)
    p, F = H.p, H.field
    beta_F = up.gamma_plus @ up.beta_plus
    Phi_F = Mat.block([[None, beta_F], [Mat.identity(p, F), None]], F)
    omega = Mat.block([[None, H.QW], [-H.QW, None]], F)
    rep = Report("cayley_symplectic")
    defect = Phi_F.T @ omega + omega @ Phi_F
    rep.check("omega_F(Phi u, v) = -omega_F(u, Phi v)", defect.is_zero(), defect=defect)
    rep.check("omega_F skew and unimodular", omega.is_skew() and omega.is_unimodular())
    upper = omega.submatrix(range(p), range(p))
    lower = omega.submatrix(range(p, 2 * p), range(p, 2 * p))
    rep.check("both summands isotropic", upper.is_zero() and lower.is_zero())
    half = Fraction(1, 2)
    weights = H.W.shifted(half) + H.W.shifted(-half)
    return SpCayley(weights, Phi_F, omega, rep)


def companion(sc: SpectralCoeffs) -> Mat:
    """Matrix of multiplication by xi on the basis 1, xi, ..., xi^(p-1)."""
    p, F = sc.p, sc.field
    z = Poly((), F)
    rows = [[z] * p for _ in range(p)]
    for j in range(p - 1):
        rows[j + 1][j] = Poly.const(1, F)
    for i in range(p):
        rows[i][p - 1] = -sc.coeff(p - i)
    return Mat(rows, F, ncols=p)


def hankel_form(sc: SpectralCoeffs, size: int, shift: int) -> Mat:
    """Q(i, j) = h_(i+j-shift) when i+j >= shift, else 0 (1-based i, j)."""
    h = complete_homogeneous(sc, max(0, 2 * size - shift))
    F = sc.field
    rows = [[h[i + j - shift] if i + j >= shift else Poly((), F)
             for j in range(1, size + 1)] for i in range(1, size + 1)]
    return Mat(rows, F, ncols=size)


def pushforward_trivial(sc: SpectralCoeffs) -> CayleyTriple:
    """Companion model of the pushforward of the trivial bundle from S-bar."""
    p = sc.p
    QW = hankel_form(sc, p, p + 1)
    det = QW.det()
    if not (det.deg == 0 and det(0) in (sc.field(1), sc.field(-1))):
        raise VerificationFailure("Hankel form is not of determinant +-1", det=det)
    W = BundleMeta(tuple((p + 1) - 2 * i for i in range(1, p + 1)))
    return CayleyTriple(QW, companion(sc), W)


# --- symplectic charts -----------------------------------------------------

@dataclass(frozen=True)
class SpHiggsChart:
    V: BundleMeta
    W: BundleMeta
    QV: Mat
    QW: Mat
    beta: Mat
    gamma: Mat

    @property
    def Phi(self) -> Mat:
        return _higgs_field(self.beta, self.gamma)

    @property
    def p(self) -> int:
        return self.QW.nrows // 2

    @property
    def q(self) -> int:
        return (self.QV.nrows - self.QW.nrows) // 2


def assemble_sp(V_meta: BundleMeta, W_meta: BundleMeta, QV: Mat, QW: Mat, beta: Mat) -> SpHiggsChart:
    """Symplectic analogue of :func:`assemble_orth`; forms are not validated here."""
    if beta.shape != (QV.nrows, QW.nrows):
        raise ShapeMismatch("beta must be rank(V) x rank(W)", beta=beta.shape)
    gamma = orth_transpose(QV, QW, beta) if QW.det() else Mat.zeros(QW.nrows, QV.nrows, QV.F)
    return SpHiggsChart(V_meta, W_meta, QV, QW, beta, gamma)


def verify_sp(Hsp: SpHiggsChart, sc: SpectralCoeffs) -> Report:
    """Skew forms, symplectic transpose and det(eta - Phi) = eta^(2q) pbar(eta^2)^2."""
    rep = Report("verify_sp")
    rep.check("Q_V skew-symmetric", Hsp.QV.is_skew())
    rep.check("Q_W skew-symmetric", Hsp.QW.is_skew())
    rep.check("Q_V unimodular", Hsp.QV.is_unimodular())
    rep.check("Q_W unimodular", Hsp.QW.is_unimodular())
    if not rep.passed:
        return rep
    gamma = Hsp.gamma.polynomial() if Hsp.gamma.is_polynomial() else None
    rep.check("gamma is the symplectic transpose",
              gamma is not None and Hsp.QW @ gamma == Hsp.beta.T @ Hsp.QV)
    G = Mat.blockdiag(Hsp.QV, -Hsp.QW)
    Phi = Hsp.Phi
    rep.check("Phi skew for the combined form", (Phi.T @ G + G @ Phi).is_zero())
    s = sc.s_poly()
    model = AuxPoly.monomial(2 * Hsp.q, sc.field) * s * s
    cp = Phi.charpoly()
    rep.check("char poly is eta^(2q) times the square of the S polynomial", cp == model,
              got=cp.pretty(), expected=model.pretty())
    return rep
