"""Spectral coefficients and the covers S, S-bar and C.

The base is an affine chart with coordinate ``z`` and K trivialized by dz,
so a section a_i of K^(2i) is simply a polynomial.  Degrees are not tied to
the genus: ``g`` is only carried along for the closed-form census layer.
"""
from __future__ import annotations

import random as _random
from dataclasses import dataclass
from itertools import combinations_with_replacement

from .errors import InputError, NotSplit
from .exactcore import DEFAULT_FIELD, AuxPoly, Field, Poly, poly_squarefree, resultant
from .report import Report


@dataclass(frozen=True)
class SpectralCoeffs:
    """The coefficients a = (a_1, ..., a_p) with (p, q, g) metadata."""

    p: int
    q: int
    g: int
    a: tuple

    def __post_init__(self):
        if self.p < 1 or self.q < 0 or self.g < 2:
            raise InputError("need p >= 1, q >= 0, g >= 2", p=self.p, q=self.q, g=self.g)
        if len(self.a) != self.p:
            raise InputError("expected p coefficient polynomials", p=self.p, got=len(self.a))
        if not self.a[-1]:
            raise InputError("a_p must be nonzero")
        fields = {c.F for c in self.a}
        if len(fields) != 1:
            raise InputError("coefficients live in different fields")
        char = self.field.characteristic
        top = max(max(c.deg for c in self.a), 2 * self.p)
        if char and char <= 2 * top:
            raise InputError("field characteristic too small for these degrees",
                             characteristic=char, max_degree=top)

    @property
    def field(self) -> Field:
        return self.a[0].F

    def coeff(self, k: int) -> Poly:
        """a_k with a_0 = 1 and a_k = 0 outside 0..p."""
        if k == 0:
            return Poly.const(1, self.field)
        if 1 <= k <= self.p:
            return self.a[k - 1]
        return Poly((), self.field)

    @property
    def ap(self) -> Poly:
        return self.a[-1]

    def sbar_poly(self) -> AuxPoly:
        """xi^p + a_1 xi^(p-1) + ... + a_p."""
        return AuxPoly([self.coeff(self.p - k) for k in range(self.p + 1)], self.field, "xi")

    def s_poly(self) -> AuxPoly:
        """eta^(2p) + a_1 eta^(2p-2) + ... + a_p."""
        out = self.sbar_poly().substitute_power(2)
        out.var = "eta"
        return out

    def c_poly(self) -> AuxPoly:
        """zeta^2 - a_p."""
        F = self.field
        return AuxPoly([-self.ap, Poly((), F), Poly.const(1, F)], F, "zeta")

    def with_q(self, q: int) -> "SpectralCoeffs":
        return SpectralCoeffs(self.p, q, self.g, self.a)

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q, "g": self.g, "a": [c.to_json() for c in self.a]}

    @classmethod
    def from_json(cls, data: dict, F: Field = DEFAULT_FIELD) -> "SpectralCoeffs":
        try:
            p = int(data["p"])
            a = tuple(Poly.from_json(c, F) for c in data["a"])
            return cls(p, int(data.get("q", 1)), int(data.get("g", 2)), a)
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError("malformed spectral coefficients", detail=str(exc)) from exc

    @classmethod
    def build(cls, a, p: int | None = None, q: int = 1, g: int = 2,
              F: Field = DEFAULT_FIELD) -> "SpectralCoeffs":
        """Convenience constructor from Polys or ascending coefficient lists."""
        polys = tuple(c if isinstance(c, Poly) else
                      Poly(c if isinstance(c, (list, tuple)) else (c,), F) for c in a)
        return cls(p or len(polys), q, g, polys)


@dataclass(frozen=True)
class CoverModel:
    kind: str
    poly: AuxPoly
    branch_points: tuple


@dataclass(frozen=True)
class CoverGenera:
    g_S: int
    g_Sbar: int
    g_C: int
    d: int
    consistent: bool

    def to_json(self) -> dict:
        return {"g_S": self.g_S, "g_Sbar": self.g_Sbar, "g_C": self.g_C,
                "d": self.d, "consistent": self.consistent}


def char_poly_model(sc: SpectralCoeffs) -> AuxPoly:
    """eta^q (eta^(2p) + a_1 eta^(2p-2) + ... + a_p)."""
    return AuxPoly.monomial(sc.q, sc.field) * sc.s_poly()


def regularity_check(sc: SpectralCoeffs) -> Report:
    """Chart regularity: a_p squarefree, coprime to a_(p-1), and S-bar unramified-generic.

    The third condition asks the discriminant resultant of the S-bar
    polynomial to be nonzero; it is a sufficient smoothness proxy.
    """
    rep = Report("regularity")
    ap = sc.ap
    rep.check("a_p squarefree", poly_squarefree(ap), a_p=ap)
    g = ap.gcd(sc.coeff(sc.p - 1))
    rep.check("a_p and a_(p-1) coprime", g.deg == 0, gcd=g)
    pbar = sc.sbar_poly()
    disc = resultant(pbar, pbar.derivative())
    rep.check("discriminant of S-bar nonzero", bool(disc), resultant=disc)
    return rep


def is_regular(sc: SpectralCoeffs) -> bool:
    return regularity_check(sc).passed


def complete_homogeneous(sc: SpectralCoeffs, u_max: int) -> list:
    """h_0, ..., h_(u_max) via h_j = -sum_(u<j) h_u a_(j-u)."""
    if u_max < 0:
        raise InputError("u_max must be non-negative", u_max=u_max)
    h = [Poly.const(1, sc.field)]
    for j in range(1, u_max + 1):
        acc = Poly((), sc.field)
        for u in range(max(0, j - sc.p), j):
            acc = acc + h[u] * sc.coeff(j - u)
        h.append(-acc)
    return h


def homogeneous_from_roots(roots, u: int, F: Field | None = None):
    """Brute-force h_u of the given roots (Poly or scalar) by summing monomials."""
    roots = list(roots)
    one = roots[0].one_like() if roots and isinstance(roots[0], Poly) else 1
    total = one * 0 if isinstance(one, Poly) else 0
    for combo in combinations_with_replacement(range(len(roots)), u):
        term = one
        for i in combo:
            term = term * roots[i]
        total = total + term
    return total


def cover_genera(p: int, g: int) -> CoverGenera:
    """Genera of S, S-bar and C with the Riemann-Hurwitz consistency flag for C."""
    if p < 1 or g < 2:
        raise InputError("need p >= 1 and g >= 2", p=p, g=g)
    g_S = 1 + 4 * p * p * (g - 1)
    g_Sbar = (2 * p * p - p) * (g - 1) + 1
    g_C = (2 * p + 2) * (g - 1) + 1
    d = 2 * p * (g - 1)
    return CoverGenera(g_S, g_Sbar, g_C, d, (g_C - 1) - d == 2 * (g - 1))


def branch_points(sc: SpectralCoeffs) -> list:
    """Roots of a_p, all of which must lie in the coefficient field."""
    ap = sc.ap
    if not poly_squarefree(ap):
        raise InputError("a_p must be squarefree", a_p=ap)
    roots = ap.roots()
    if len(roots) != ap.deg:
        raise NotSplit("a_p does not split over the field", a_p=ap, roots_found=len(roots),
                       degree=ap.deg)
    return roots


def cover_models(sc: SpectralCoeffs) -> dict:
    """The three covers with their branch points found in the field.

    For C these are the zeros of a_p; for S and S-bar they are the
    field-rational zeros of the discriminant resultant.
    """
    out = {}
    for kind, poly in (("S", sc.s_poly()), ("Sbar", sc.sbar_poly()), ("C", sc.c_poly())):
        if kind == "C":
            pts = tuple(sc.ap.roots())
        else:
            disc = resultant(poly, poly.derivative())
            pts = tuple(disc.roots()) if disc else ()
        out[kind] = CoverModel(kind, poly, pts)
    return out


def random_regular_coeffs(p: int, rng: _random.Random, q: int = 1, g: int = 2,
                          F: Field = DEFAULT_FIELD, max_deg_ap: int = 8,
                          max_deg: int = 3, min_deg_ap: int = 1) -> SpectralCoeffs:
    """Random regular coefficients with a_p split over F into distinct roots.

    Rejection sampling: resample until :func:`regularity_check` passes.
    """
    while True:
        n = rng.randint(min_deg_ap, max_deg_ap)
        roots = set()
        while len(roots) < n:
            roots.add(F.random(rng))
        lead = F.zero
        while not lead:
            lead = F.random(rng)
        ap = Poly.from_roots(sorted(roots), F, lead=lead)
        others = [Poly([F.random(rng) for _ in range(rng.randint(0, max_deg + 1))], F)
                  for _ in range(p - 1)]
        sc = SpectralCoeffs(p, q, g, tuple(others) + (ap,))
        if is_regular(sc):
            return sc
