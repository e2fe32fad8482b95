"""Normal forms of matrices over the PID F[z].

The workhorse is :func:`column_hermite`, which finds a unimodular ``U`` with
``A @ U = [H | 0]``: ``H`` has full column rank, its pivot rows increase from
left to right, every pivot is monic and the entries to the left of a pivot
are reduced modulo it.  This form is unique for a given column module, so it
doubles as a canonical form.  ``U`` and ``U^-1`` are tracked together.
"""
from __future__ import annotations

from dataclasses import dataclass

from .field import Field
from .matrix import Mat
from .poly import Poly
from .ratfunc import RatFunc
from ..errors import InputError, NotModule


@dataclass(frozen=True)
class HermiteResult:
    H: Mat
    U: Mat
    Uinv: Mat
    rank: int
    pivots: tuple


def _cols(A: Mat):
    return [list(c) for c in A.columns()]


def column_hermite(A: Mat, transforms: bool = True) -> HermiteResult:
    """Column Hermite normal form with unimodular transforms."""
    F = A.F
    A = A.polynomial()
    n, m = A.shape
    cols = _cols(A)
    zero, one = Poly((), F), Poly.const(1, F)
    U = [[one if i == j else zero for i in range(m)] for j in range(m)] if transforms else None
    Ui = [[one if i == j else zero for j in range(m)] for i in range(m)] if transforms else None

    def axpy(k, r, q):
        # col_k -= q * col_r
        cols[k] = [a - q * b for a, b in zip(cols[k], cols[r])]
        if transforms:
            U[k] = [a - q * b for a, b in zip(U[k], U[r])]
            Ui[r] = [a + q * b for a, b in zip(Ui[r], Ui[k])]

    def swap(k, r):
        cols[k], cols[r] = cols[r], cols[k]
        if transforms:
            U[k], U[r] = U[r], U[k]
            Ui[k], Ui[r] = Ui[r], Ui[k]

    def scale(r, c):
        cols[r] = [a.scale(c) for a in cols[r]]
        if transforms:
            U[r] = [a.scale(c) for a in U[r]]
            ci = F.inv(c)
            Ui[r] = [a.scale(ci) for a in Ui[r]]

    r = 0
    pivots = []
    for i in range(n):
        if r == m:
            break
        while True:
            live = [k for k in range(r, m) if cols[k][i]]
            if not live:
                break
            best = min(live, key=lambda k: cols[k][i].deg)
            if best != r:
                swap(best, r)
            done = True
            for k in range(r + 1, m):
                if cols[k][i]:
                    q = cols[k][i] // cols[r][i]
                    axpy(k, r, q)
                    if cols[k][i]:
                        done = False
            if done:
                break
        if not cols[r][i]:
            continue
        scale(r, F.inv(cols[r][i].lc))
        piv = cols[r][i]
        for j in range(r):
            if cols[j][i].deg >= piv.deg:
                axpy(j, r, cols[j][i] // piv)
        pivots.append(i)
        r += 1
    H = Mat.from_columns(cols[:r], n, F)
    if transforms:
        Um = Mat.from_columns(U, m, F)
        Uim = Mat(Ui, F, ncols=m)
    else:
        Um = Uim = None
    return HermiteResult(H, Um, Uim, r, tuple(pivots))


def hermite_basis(A: Mat) -> Mat:
    """Canonical basis (columns) of the F[z]-column module of ``A``."""
    return column_hermite(A, transforms=False).H


def saturated_kernel(A: Mat) -> Mat:
    """Saturated polynomial basis of ker(A), in canonical Hermite form.

    The returned columns span the kernel over F(z) and the gcd of their
    maximal minors is 1.  A zero kernel gives a matrix with no columns.
    """
    res = column_hermite(A)
    m = A.ncols
    K = res.U.submatrix(range(m), range(res.rank, m))
    if K.ncols == 0:
        return K
    return hermite_basis(K)


def completion(K: Mat):
    """Extend a saturated basis ``K`` (n x k) to a unimodular ``P = [K | C]``.

    Returns ``(P, P^-1)``.
    """
    n, k = K.shape
    res = column_hermite(K.T)
    H = res.H
    if res.rank != k or H != Mat.identity(k, K.F):
        raise InputError("basis is not saturated; cannot complete", shape=K.shape)
    return res.Uinv.T, res.U.T


def common_denominator(vectors, F: Field) -> Poly:
    d = Poly.const(1, F)
    for v in vectors:
        for a in v:
            d = d.lcm(RatFunc.of(a, F).den)
    return d


def smith_hermite_basis(generators, nrows: int | None = None, F: Field | None = None) -> Mat:
    """Free F[z]-basis of the module generated by rational-function vectors.

    ``generators`` are sequences of :class:`RatFunc`/:class:`Poly`; the result
    is a matrix of :class:`RatFunc` whose columns form a canonical basis.
    """
    generators = [list(g) for g in generators]
    if not generators:
        if nrows is None or F is None:
            raise InputError("empty generator list needs nrows and field")
        return Mat([[] for _ in range(nrows)], F, ncols=0) if nrows else Mat([], F)
    F = F or RatFunc.of(generators[0][0]).F
    n = len(generators[0])
    if any(len(g) != n for g in generators):
        raise InputError("generators have different lengths")
    d = common_denominator(generators, F)
    if not d:
        raise NotModule("generators have unbounded poles")
    G = Mat.from_columns([[(RatFunc.of(a, F) * d).to_poly() for a in g] for g in generators], n, F)
    H = hermite_basis(G)
    dinv = RatFunc(Poly.const(1, F), d)
    return H.map(lambda a: RatFunc(a) * dinv)


def smith_invariants(A: Mat) -> list:
    """Monic invariant factors d1 | d2 | ... of a polynomial matrix (nonzero ones)."""
    F = A.F
    M = [list(r) for r in A.polynomial().rows]
    n, m = A.shape
    out = []
    t = 0
    while t < min(n, m):
        entries = [(i, j) for i in range(t, n) for j in range(t, m) if M[i][j]]
        if not entries:
            break
        while True:
            i0, j0 = min(((i, j) for i in range(t, n) for j in range(t, m) if M[i][j]),
                         key=lambda ij: M[ij[0]][ij[1]].deg)
            M[t], M[i0] = M[i0], M[t]
            for row in M:
                row[t], row[j0] = row[j0], row[t]
            piv = M[t][t]
            clean = True
            for i in range(t + 1, n):
                if M[i][t]:
                    q = M[i][t] // piv
                    M[i] = [a - q * b for a, b in zip(M[i], M[t])]
                    clean = clean and not M[i][t]
            for j in range(t + 1, m):
                if M[t][j]:
                    q = M[t][j] // piv
                    for row in M:
                        row[j] = row[j] - q * row[t]
                    clean = clean and not M[t][j]
            if not clean:
                continue
            bad = next(((i, j) for i in range(t + 1, n) for j in range(t + 1, m)
                        if M[i][j] and (M[i][j] % piv)), None)
            if bad is None:
                break
            M[t] = [a + b for a, b in zip(M[t], M[bad[0]])]
        out.append(M[t][t].monic())
        t += 1
    return out


def maximal_minors_gcd(K: Mat) -> Poly:
    """Monic gcd of all maximal minors (the saturation certificate)."""
    from .matrix import minors
    k = min(K.shape)
    g = Poly((), K.F)
    for d in minors(K.polynomial(), k):
        g = g.gcd(d)
        if g.deg == 0 and g:
            break
    return g


def column_span_contains(basis: Mat, vec) -> bool:
    """Is ``vec`` an F[z]-combination of the columns of ``basis``?

    Both may have rational-function entries.
    """
    F = basis.F
    n = basis.nrows
    allv = [list(c) for c in basis.columns()] + [list(vec)]
    d = common_denominator(allv, F)
    B = Mat.from_columns([[(RatFunc.of(a, F) * d).to_poly() for a in c] for c in allv[:-1]], n, F)
    v = [(RatFunc.of(a, F) * d).to_poly() for a in allv[-1]]
    H1 = hermite_basis(B)
    H2 = hermite_basis(B.hstack(Mat.from_columns([v], n, F)))
    return H1 == H2
