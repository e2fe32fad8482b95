"""Squarefreeness, Sylvester resultants and characteristic polynomials.

Sign convention for resultants: rows of the Sylvester matrix list the
coefficients of ``f`` (highest degree first) shifted ``deg g`` times, then
those of ``g`` shifted ``deg f`` times; the resultant is its determinant.
With this convention ``Res(t^2 - z, 2t) = -4z``.
"""
from __future__ import annotations

from .matrix import Mat, bareiss_det
from .poly import AuxPoly, Poly
from ..errors import DegenerateInput, ZeroPolynomial


def poly_squarefree(f: Poly) -> bool:
    """True iff gcd(f, f') is constant."""
    if not f:
        raise ZeroPolynomial("squarefree test of the zero polynomial")
    return f.gcd(f.derivative()).deg == 0


def sylvester_matrix(f: AuxPoly, g: AuxPoly) -> list:
    m, n = f.deg, g.deg
    zero = Poly((), f.F)
    size = m + n
    fd = list(reversed(f.c))
    gd = list(reversed(g.c))
    rows = []
    for k in range(n):
        rows.append([zero] * k + fd + [zero] * (size - m - 1 - k))
    for k in range(m):
        rows.append([zero] * k + gd + [zero] * (size - n - 1 - k))
    return rows


def resultant(f: AuxPoly, g: AuxPoly) -> Poly:
    """Sylvester resultant in the auxiliary variable; a Poly in z."""
    if f.is_zero() or g.is_zero():
        raise DegenerateInput("resultant with a vanishing polynomial")
    if f.deg == 0 and g.deg == 0:
        return Poly.const(1, f.F)
    return bareiss_det(sylvester_matrix(f, g), f.F)


def char_poly(A: Mat, var: str = "eta") -> AuxPoly:
    """det(var*I - A), computed without division."""
    return A.charpoly(var)
