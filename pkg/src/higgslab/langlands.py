"""Quadratic bundles, equivariant bundles on C and the extension gluing.

Chart model of a bundle M on the double cover C: zeta^2 = a_p
-----------------------------------------------------------------
Let R = F[z][zeta]/(zeta^2 - a_p).  A section of M is written
s = s0 + zeta*s1 against an R-frame e_1..e_q, and stored as the pair
(s0, s1) in F(z)^(2q).  M itself is the F[z]-lattice spanned by the columns
of ``L``.  In these ambient coordinates

* multiplication by zeta is ``Z = [[0, a_p I], [I, 0]]``;
* the lift of the involution with matrix A = A0 + zeta*A1 on the frame is
  ``Sigma = [[A0, -a_p A1], [A1, -A0]]``;
* Q_M = G0 + zeta*G1 splits as Q(s, t) = s^T E t + zeta * s^T O t with
  ``E = [[G0, a_p G1], [a_p G1, a_p G0]]`` and ``O = [[G1, G0], [G0, a_p G1]]``.

The invariant direct image is the saturated kernel of Sigma - I on the
lattice, with Q0 = the even part E restricted to it.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product

from .bundles import BundleMeta, QuadraticBundle
from .errors import (
    DeterminantMismatch,
    Indecomposable,
    InputError,
    InternalHolomorphyFailure,
    IsometryViolation,
    KernelViolation,
    ModelUnsupported,
    NotSplitScalar,
    ShapeMismatch,
    TypeMismatch,
    VerificationFailure,
)
from .exactcore import (
    DEFAULT_FIELD,
    Field,
    Mat,
    Poly,
    RatFunc,
    bilinear,
    hermite_basis,
    matvec,
    nullspace,
    rank,
    saturated_kernel,
    smith_hermite_basis,
    smith_invariants,
)
from .higgsmodel import CayleyTriple, OrthHiggsChart, assemble_orth, pushforward_trivial, verify_so
from .report import Report
from .serialize import dumps
from .spectral import SpectralCoeffs, branch_points

__all__ = [
    "EquivariantBundle", "ExtensionData", "ExtensionResult", "QuadraticBundle", "Summand",
    "admissible_extension", "build_extension", "canonical_tau", "compatibility_check",
    "equivariant_lift", "extension_from_tau", "extension_raw", "invariant_direct_image",
    "local_model_check", "normalized_null_vector", "round_trip_certificate",
    "stability_check", "stack_dimension", "tau_conversion", "torsor_sweep",
]


# --- equivariant bundles -----------------------------------------------------

@dataclass(frozen=True)
class Summand:
    """A line summand of a decomposable M.

    ``swap`` is the summand the involution sends it to (itself when
    invariant, in which case ``sign`` is the eigenvalue on the fibres);
    ``partner`` is the summand it pairs with under Q_M (itself when the form
    is nondegenerate on it).
    """

    degree: int
    swap: int
    partner: int
    sign: int = 1


@dataclass(frozen=True)
class EquivariantBundle:
    ap: Poly
    L: Mat
    Sigma: Mat
    G0: Mat
    G1: Mat
    orientation: int = 1
    summands: tuple | None = None

    @property
    def rank(self) -> int:
        return self.G0.nrows

    @property
    def field(self) -> Field:
        return self.ap.F

    def Z(self) -> Mat:
        q, F = self.rank, self.field
        return Mat.block([[None, Mat.identity(q, F).scale(self.ap)],
                          [Mat.identity(q, F), None]], F)

    def even_odd(self):
        ap, G0, G1 = self.ap, self.G0, self.G1
        E = Mat.block([[G0, G1.scale(ap)], [G1.scale(ap), G0.scale(ap)]], self.field)
        O = Mat.block([[G1, G0], [G0, G1.scale(ap)]], self.field)
        return E, O

    def lattice_forms(self):
        """(Sigma, Z, E, O) in lattice coordinates; all must be polynomial."""
        L, Li = self.L, self.L.inverse()
        E, O = self.even_odd()
        out = (Li @ self.Sigma @ L, Li @ self.Z() @ L, L.T @ E @ L, L.T @ O @ L)
        for name, m in zip(("Sigma", "Z", "E", "O"), out):
            if not m.is_polynomial():
                raise InputError("lattice is not preserved", operator=name)
        return tuple(m.polynomial() for m in out)

    def fiber_type(self, x) -> tuple:
        """(q+, q-): eigenvalue multiplicities of the involution on the fibre over x."""
        F = self.field
        S, Z, _, _ = self.lattice_forms()
        Sx, Zx = S.at(x), Z.at(x)
        n = len(Sx)
        half = F.inv(F(2))
        out = []
        for sgn in (1, -1):
            P = [[F.mul(half, F.add(F.one if i == j else F.zero, Sx[i][j] if sgn > 0 else F.neg(Sx[i][j])))
                  for j in range(n)] for i in range(n)]
            dim_e = rank(P, F)
            PZ = [matvec(P, col, F) for col in zip(*Zx)]
            out.append(dim_e - rank(PZ, F))  # rank of P Z equals rank of its transpose
        return tuple(out)

    def validate(self) -> Report:
        rep = Report("equivariant bundle")
        S, Z, E, O = self.lattice_forms()
        q, F, ap = self.rank, self.field, self.ap
        I = Mat.identity(2 * q, F)
        rep.check("involution squares to 1", S @ S == I)
        rep.check("involution anti-commutes with zeta", S @ Z == -(Z @ S))
        rep.check("zeta squares to a_p", Z @ Z == I.scale(ap))
        rep.check("involution preserves the even form", S.T @ E @ S == E)
        rep.check("involution negates the odd form", S.T @ O @ S == -O)
        rep.check("zeta self-adjoint", Z.T @ E == E @ Z)
        det = E.det()
        quo, rem = divmod(det, ap ** q)
        rep.check("trace form determinant is a unit times a_p^q",
                  not rem and bool(quo) and quo.deg == 0, det=det)
        rep.check("orientation is +-1", self.orientation in (1, -1))
        return rep

    def to_json(self) -> dict:
        out = {"a_p": self.ap.to_json(), "L": self.L.to_json(), "Sigma": self.Sigma.to_json(),
               "G0": self.G0.to_json(), "G1": self.G1.to_json(), "orientation": self.orientation}
        if self.summands is not None:
            out["summands"] = [{"degree": s.degree, "swap": s.swap, "partner": s.partner,
                                "sign": s.sign} for s in self.summands]
        return out

    # constructors -------------------------------------------------------
    @classmethod
    def decomposable(cls, ap: Poly, summands, orientation: int = 1) -> "EquivariantBundle":
        """Sum of line summands with constant involution and form matrices."""
        summands = tuple(summands)
        q, F = len(summands), ap.F
        for k, s in enumerate(summands):
            if not (0 <= s.swap < q and 0 <= s.partner < q):
                raise ShapeMismatch("summand index out of range", summand=k)
            if summands[s.swap].swap != k or summands[s.partner].partner != k:
                raise InputError("swap and partner maps must be involutions", summand=k)
        A0 = [[0] * q for _ in range(q)]
        G0 = [[0] * q for _ in range(q)]
        for k, s in enumerate(summands):
            A0[s.swap][k] = s.sign if s.swap == k else 1
            G0[k][s.partner] = 1
        A0m, G0m = Mat(A0, F), Mat(G0, F)
        Zq = Mat.zeros(q, q, F)
        Sigma = Mat.block([[A0m, None], [None, -A0m]], F) if q else Mat([], F)
        M = cls(ap, Mat.identity(2 * q, F), Sigma, G0m, Zq, orientation, summands)
        if A0m.T @ G0m @ A0m != G0m:
            raise InputError("involution is not an isometry of the summand pairing")
        return M

    @classmethod
    def trivial_model(cls, ap: Poly, q: int, degrees=None, orientation: int = 1) -> "EquivariantBundle":
        """O^q with an orthonormal frame and involution diag(-1, 1, ..., 1)."""
        degrees = degrees or [0] * q
        return cls.decomposable(ap, [Summand(degrees[k], k, k, -1 if k == 0 else 1)
                                     for k in range(q)], orientation)

    @classmethod
    def swap_model(cls, ap: Poly, degree: int = 0, extra: int = 0,
                   orientation: int = 1) -> "EquivariantBundle":
        """N + N^-1 with the hyperbolic form and swapping involution, plus ``extra`` invariant +1 lines."""
        ss = [Summand(degree, 1, 1), Summand(-degree, 0, 0)]
        ss += [Summand(0, 2 + k, 2 + k, 1) for k in range(extra)]
        return cls.decomposable(ap, ss, orientation)


def _require_type(M: EquivariantBundle, sc: SpectralCoeffs) -> list:
    if M.ap != sc.ap:
        raise InputError("bundle and spectral data use different a_p")
    pts = branch_points(sc)
    q = M.rank
    for x in pts:
        t = M.fiber_type(x)
        if t != (q - 1, 1):
            raise TypeMismatch("involution has the wrong type at a fixed point", x=x,
                               type=t, expected=(q - 1, 1))
    return pts


def local_model_check(Q0: Mat, sc: SpectralCoeffs) -> Report:
    """Q0 is locally diag(z - x, 1, ..., 1) at every zero x of a_p."""
    rep = Report("local model")
    q, F = Q0.nrows, Q0.F
    det = Q0.det()
    inv = smith_invariants(Q0)
    expected = [Poly.const(1, F)] * (q - 1) + [sc.ap.monic()]
    rep.check("invariant factors (1, ..., 1, a_p)", inv == expected,
              got=[f.pretty() for f in inv])
    for x in sc.ap.roots():
        rep.check("rank drops by one", rank(Q0.at(x), F) == q - 1, x=x)
        rep.check("determinant vanishes to first order", bool(det) and det.valuation_at(x) == 1, x=x)
    return rep


def invariant_direct_image(M: EquivariantBundle, sc: SpectralCoeffs) -> QuadraticBundle:
    """Invariant sections of M with the restricted form, checked against the local model."""
    _require_type(M, sc)
    S, _, E, O = M.lattice_forms()
    q = M.rank
    K = saturated_kernel(S - Mat.identity(2 * q, M.field))
    if K.ncols != q:
        raise VerificationFailure("invariant part has the wrong rank", rank=K.ncols, q=q)
    odd = K.T @ O @ K
    if not odd.is_zero():
        raise VerificationFailure("form on invariant sections has an odd part")
    Q0 = K.T @ E @ K
    rep = local_model_check(Q0, sc)
    if not rep.passed:
        raise DeterminantMismatch("direct image misses the local model",
                                  failed=[c.name for c in rep.failures])
    return QuadraticBundle(Q0, BundleMeta.flat(q, -sc.p), M.L @ K)


def equivariant_lift(V0: QuadraticBundle, sc: SpectralCoeffs) -> EquivariantBundle:
    """Inverse of the direct image: M = V0 + zeta * V0-dual with involution diag(1, -1)."""
    Q0, F, q = V0.Q0, V0.field, V0.rank
    if sc.ap.deg < 1:
        raise InputError("a_p must be nonconstant")
    det = Q0.det()
    quo, rem = divmod(det, sc.ap)
    if rem or not quo or quo.deg != 0:
        raise DeterminantMismatch("det(Q0) is not a unit times a_p", det=det)
    I = Mat.identity(q, F)
    Sigma = Mat.block([[I, None], [None, -I]], F)
    L = Mat.blockdiag(hermite_basis(Q0), I)
    M = EquivariantBundle(sc.ap, L, Sigma, Q0.inverse(), Mat.zeros(q, q, F))
    return M


def round_trip_certificate(M: EquivariantBundle, sc: SpectralCoeffs) -> Report:
    """Compare M with lift(direct_image(M)) on rank, types, Gram invariants and V0 isometry."""
    rep = Report("round trip")
    V0 = invariant_direct_image(M, sc)
    M2 = equivariant_lift(V0, sc)
    V0b = invariant_direct_image(M2, sc)
    rep.check("lifted bundle is well formed", M2.validate().passed)
    rep.check("rank", M2.rank == M.rank)
    for x in sc.ap.roots():
        rep.check("fibre type", M.fiber_type(x) == M2.fiber_type(x), x=x)
    E1, E2 = M.lattice_forms()[2], M2.lattice_forms()[2]
    rep.check("trace form invariant factors", smith_invariants(E1) == smith_invariants(E2))
    # V0 and V0b are isometric through T = Q0^-1 B with B = Hermite basis of Q0
    Q0 = V0.Q0
    B = hermite_basis(Q0)
    T = Q0.inverse() @ B
    ok = T.is_unimodular()
    rep.check("V0 transport matrix unimodular", ok)
    rep.check("V0 transport is an isometry", ok and T.T @ Q0 @ T == V0b.Q0)
    rep.check("local model after the round trip", local_model_check(V0b.Q0, sc).passed)
    return rep


def stability_check(M: EquivariantBundle) -> Report:
    """Degree test over coordinate invariant isotropic subbundles of a decomposable M."""
    rep = Report("stability")
    if M.summands is None:
        if M.rank == 1:
            rep.check("no invariant isotropic subbundles", True)
            return rep
        raise Indecomposable("summand decomposition unknown; stability not decided", rank=M.rank)
    ss = M.summands
    idx = range(len(ss))
    found = 0
    for k in range(1, len(ss) + 1):
        for sub in combinations(idx, k):
            chosen = set(sub)
            if any(ss[i].swap not in chosen for i in sub):
                continue
            if any(ss[i].partner in chosen for i in sub):
                continue
            found += 1
            deg = sum(ss[i].degree for i in sub)
            rep.check(f"deg {list(sub)} <= 0", deg <= 0, degree=deg)
    if not found:
        rep.check("no invariant isotropic subbundles", True)
    rep.add("invariant_isotropic_count", found)
    return rep


# --- extension data ------------------------------------------------------------

@dataclass(frozen=True)
class ExtensionData:
    """Per branch point x, the vector i_x(n_x) in W-coordinates."""

    D: tuple
    i: tuple

    def to_json(self, F: Field = DEFAULT_FIELD) -> dict:
        return {"D": [F.to_str(x) for x in self.D], "i": [[F.to_str(c) for c in v] for v in self.i]}

    @classmethod
    def from_json(cls, data: dict, sc: SpectralCoeffs) -> "ExtensionData":
        F = sc.field
        if "tau" in data:
            return extension_from_tau([int(t) for t in data["tau"]], sc)
        try:
            D = tuple(F.from_str(str(x)) for x in data["D"])
            vecs = tuple(tuple(F.from_str(str(c)) for c in v) for v in data["i"])
        except KeyError as exc:
            raise InputError("extension data needs D and i (or tau)") from exc
        if len(D) != len(vecs):
            raise ShapeMismatch("one vector per branch point", D=len(D), i=len(vecs))
        return cls(D, vecs)


def normalized_null_vector(V0: QuadraticBundle, x, sc: SpectralCoeffs) -> list:
    """Constant vector spanning ker Q0(x), scaled so (Q0(n, n)/a_p)(x) = 1."""
    F = V0.field
    ker = nullspace(V0.Q0.at(x), F)
    if len(ker) != 1:
        raise DeterminantMismatch("Q0(x) must have a one-dimensional kernel", x=x, dim=len(ker))
    n = ker[0]
    c = F.div(bilinear(V0.Q0.derivative().at(x), n, n, F), sc.ap.derivative()(x))
    lam = F.sqrt(F.inv(c))
    if lam is None:
        raise NotSplitScalar("normalization needs a square root outside the field", x=x, value=c)
    return [F.mul(lam, a) for a in n]


def compatibility_check(ext: ExtensionData, ct: CayleyTriple, V0: QuadraticBundle,
                        sc: SpectralCoeffs) -> Report:
    """Kernel and isometry conditions at every branch point, with the derivative cross-check."""
    F = sc.field
    rep = Report("compatibility")
    pts = branch_points(sc)
    rep.check("extension data covers every branch point", sorted(ext.D) == sorted(pts),
              D=list(ext.D), expected=pts)
    if not rep.passed:
        return rep
    dbeta = ct.beta_F.derivative()
    for x, c in zip(ext.D, ext.i):
        c = [F(a) for a in c]
        if len(c) != ct.p:
            raise ShapeMismatch("i_x must have p entries", x=x)
        bc = matvec(ct.beta_F.at(x), c, F)
        rep.check("kernel: beta_F(x) i_x = 0", not any(bc), x=x, image=bc)
        qv = bilinear(ct.QW.at(x), c, c, F)
        target = sc.coeff(sc.p - 1)(x)
        rep.check("isometry: Q_W(i_x, i_x) = a_(p-1)(x)", qv == target, x=x, value=qv, expected=target)
        cross = bilinear(ct.QW.at(x), matvec(dbeta.at(x), c, F), c, F)
        rep.check("derivative identity: Q_W(beta_F'(x) i_x, i_x) = -a_p'(x)",
                  cross == F.neg(sc.ap.derivative()(x)), x=x, value=cross)
    return rep


def require_compatible(ext, ct, V0, sc) -> Report:
    rep = compatibility_check(ext, ct, V0, sc)
    for c in rep.failures:
        x = c.witness.get("x")
        if c.name.startswith("kernel"):
            raise KernelViolation("i_x is not in ker beta_F(x)", x=x, identity=c.name)
        if c.name.startswith("isometry") or c.name.startswith("derivative"):
            raise IsometryViolation("i_x violates the isometry condition", x=x, identity=c.name,
                                    value=c.witness.get("value"), expected=c.witness.get("expected"))
        raise InputError(c.name, **c.witness)
    return rep


@dataclass(frozen=True)
class ExtensionResult:
    """Raw output of the gluing, before any polynomiality is asserted."""

    basis: Mat
    QV: Mat
    beta: Mat
    gamma: Mat
    p: int
    q: int

    @property
    def is_holomorphic(self) -> bool:
        return self.QV.is_polynomial() and self.beta.is_polynomial() and self.gamma.is_polynomial()

    @property
    def is_unimodular(self) -> bool:
        return self.QV.is_unimodular()

    def canonical_key(self) -> str:
        """Canonical form of the glued lattice modulo the global sign (v, w) -> (-v, w)."""
        n = self.p + self.q
        flip = Mat.diag([-1] * self.p + [1] * self.q, self.basis.F)
        keys = []
        for B in (self.basis, flip.rational() @ self.basis):
            H = smith_hermite_basis(B.columns(), n, B.F)
            keys.append(dumps(H))
        return min(keys)


def extension_raw(ct: CayleyTriple, V0: QuadraticBundle, ext: ExtensionData,
                  sc: SpectralCoeffs) -> ExtensionResult:
    """Glue without checking compatibility: the forced build."""
    F, p, q = sc.field, ct.p, V0.rank
    n = p + q
    QVp = Mat.blockdiag(ct.QW @ ct.beta_F, V0.Q0).rational()
    one = RatFunc(Poly.const(1, F))
    zero = RatFunc(Poly((), F))
    gens = [[one if i == j else zero for i in range(n)] for j in range(n)]
    for x, c in zip(ext.D, ext.i):
        nh = normalized_null_vector(V0, x, sc)
        inv = RatFunc(Poly.const(1, F), Poly((F.neg(F(x)), 1), F))
        vec = [-F(a) for a in c] + list(nh)
        gens.append([inv * RatFunc(Poly.const(a, F)) for a in vec])
    B = smith_hermite_basis(gens, n, F)
    QV = B.T @ QVp @ B
    inc = Mat.block([[Mat.identity(p, F)], [Mat.zeros(q, p, F)]], F) if q else Mat.identity(p, F)
    beta = B.inverse().rational() @ inc.rational()
    gamma = ct.beta_F.hstack(Mat.zeros(p, q, F)).rational() @ B
    simplify = (lambda m: m.polynomial() if m.is_polynomial() else m)
    return ExtensionResult(B, simplify(QV), simplify(beta), simplify(gamma), p, q)


def build_extension(ct: CayleyTriple, V0: QuadraticBundle, ext: ExtensionData,
                    sc: SpectralCoeffs, force: bool = False):
    """Reconstruct the orthogonal chart from Cayley data, V0 and gluing data.

    With ``force=True`` compatibility is not checked and the raw
    :class:`ExtensionResult` is returned so that failures can be inspected.
    """
    if force:
        return extension_raw(ct, V0, ext, sc)
    require_compatible(ext, ct, V0, sc)
    res = extension_raw(ct, V0, ext, sc)
    if not res.is_holomorphic or not res.is_unimodular:
        raise InternalHolomorphyFailure("compatible data produced a non-holomorphic gluing")
    V = BundleMeta(ct.W.shifted(-1).weights + V0.meta.weights,
                   V0.meta.twist + 2 * sc.p)
    H = assemble_orth(V, ct.W, res.QV, ct.QW, res.beta)
    if H.gamma != res.gamma:
        raise InternalHolomorphyFailure("gamma disagrees with the orthogonal transpose")
    rep = verify_so(H, sc.with_q(V0.rank))
    if not rep.passed:
        raise InternalHolomorphyFailure("glued chart fails verification",
                                        failed=[c.name for c in rep.failures])
    return H


def admissible_extension(ct: CayleyTriple, V0: QuadraticBundle, sc: SpectralCoeffs,
                         signs=None) -> ExtensionData:
    """Admissible gluing: at each x the normalized spanning vector of ker beta_F(x), times a sign."""
    F = sc.field
    pts = branch_points(sc)
    signs = list(signs) if signs is not None else [1] * len(pts)
    vecs = []
    for x, s in zip(pts, signs):
        ker = nullspace(ct.beta_F.at(x), F)
        if len(ker) != 1:
            raise KernelViolation("ker beta_F(x) must be one-dimensional", x=x, dim=len(ker))
        k = ker[0]
        ratio = F.div(sc.coeff(sc.p - 1)(x), bilinear(ct.QW.at(x), k, k, F))
        lam = F.sqrt(ratio)
        if lam is None:
            raise NotSplitScalar("isometry normalization needs a square root", x=x)
        vecs.append(tuple(F.mul(F.mul(F(s), lam), a) for a in k))
    return ExtensionData(tuple(pts), tuple(vecs))


def _sweep_item(args):
    ct, V0, sc, signs = args
    ext = admissible_extension(ct, V0, sc, signs)
    res = extension_raw(ct, V0, ext, sc)
    H = build_extension(ct, V0, ext, sc)
    cp = verify_so(H, sc.with_q(V0.rank)).artifacts["char_poly"]
    smith = smith_invariants(H.QV)
    return signs, res.canonical_key(), dumps(cp), dumps(smith)


def torsor_sweep(ct: CayleyTriple, V0: QuadraticBundle, sc: SpectralCoeffs,
                 parallel: bool = False) -> list:
    """Build all 2^|D| sign choices; return (signs, canonical key, char poly, Smith data)."""
    pts = branch_points(sc)
    jobs = [(ct, V0, sc, signs) for signs in product((1, -1), repeat=len(pts))]
    if parallel:
        with ProcessPoolExecutor() as pool:
            return list(pool.map(_sweep_item, jobs))
    return [_sweep_item(j) for j in jobs]


# --- tau data for the trivial-bundle model ------------------------------------

def _require_trivial_model(sc: SpectralCoeffs, ct: CayleyTriple | None):
    model = pushforward_trivial(sc)
    if ct is not None and (ct.QW != model.QW or ct.beta_F != model.beta_F):
        raise ModelUnsupported("tau data is defined only for the trivial-bundle model")
    return model


def tau_conversion(ext: ExtensionData, sc: SpectralCoeffs, ct: CayleyTriple | None = None) -> tuple:
    """tau_x = (first coordinate of i_x) / a_(p-1)(x), one sign per branch point."""
    model = _require_trivial_model(sc, ct)
    F = sc.field
    out = []
    for x, c in zip(ext.D, ext.i):
        c = [F(a) for a in c]
        if any(matvec(model.beta_F.at(x), c, F)):
            raise KernelViolation("i_x is not in ker beta_F(x)", x=x)
        t = F.div(c[0], sc.coeff(sc.p - 1)(x))
        if t == F.one:
            out.append(1)
        elif t == F.neg(F.one):
            out.append(-1)
        else:
            raise IsometryViolation("tau_x is not a unit isometry", x=x, value=t)
    return tuple(out)


def extension_from_tau(tau, sc: SpectralCoeffs) -> ExtensionData:
    """Inverse of :func:`tau_conversion`: i_x = tau_x * (a_(p-1), ..., a_1, 1)(x)."""
    pts = branch_points(sc)
    if len(tau) != len(pts):
        raise ShapeMismatch("one tau per branch point", tau=len(tau), D=len(pts))
    F = sc.field
    vecs = []
    for x, t in zip(pts, tau):
        if t not in (1, -1):
            raise InputError("tau entries must be +-1", x=x, tau=t)
        u = [sc.coeff(sc.p - 1 - k)(x) for k in range(sc.p)]
        vecs.append(tuple(F.mul(F(t), a) for a in u))
    return ExtensionData(tuple(pts), tuple(vecs))


def canonical_tau(tau) -> tuple:
    """Representative of {tau, -tau} whose first nonzero entry is +1."""
    tau = tuple(tau)
    first = next((t for t in tau if t), 1)
    return tau if first > 0 else tuple(-t for t in tau)


def stack_dimension(q: int, g: int, degL: int) -> int:
    """dim so(q) * (g - 1) + (q - 1) * degL."""
    if q < 1 or g < 2 or degL < 1:
        raise InputError("need q >= 1, g >= 2, degL >= 1", q=q, g=g, degL=degL)
    return q * (q - 1) // 2 * (g - 1) + (q - 1) * degL
