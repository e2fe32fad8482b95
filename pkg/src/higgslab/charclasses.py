"""GF(2) calculus for Stiefel-Whitney type invariants.

Two-torsion of a Jacobian is modelled as GF(2)^(2g) with basis order
(a_1, b_1, ..., a_g, b_g) and the standard alternating pairing.  A mod-2
index is replaced by a quadratic refinement q(x) = x^T U x with U upper
triangular; the pairing fixes U above the diagonal, so a refinement is
determined by its values on the basis.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import DimensionMismatch, FirstClassMismatch, InputError, RankRule


def _bits(v) -> np.ndarray:
    return np.asarray(v, dtype=np.uint8) & 1


def standard_pairing(g: int) -> np.ndarray:
    J = np.zeros((2 * g, 2 * g), dtype=np.uint8)
    for k in range(g):
        J[2 * k, 2 * k + 1] = J[2 * k + 1, 2 * k] = 1
    return J


@dataclass(frozen=True, eq=False)
class Z2SymplecticSpace:
    g: int

    @property
    def dim(self) -> int:
        return 2 * self.g

    @property
    def gram(self) -> np.ndarray:
        return standard_pairing(self.g)

    def pair(self, x, y) -> int:
        return int(_bits(x) @ self.gram @ _bits(y)) & 1

    def vectors(self):
        for bits in product((0, 1), repeat=self.dim):
            yield np.array(bits, dtype=np.uint8)

    def is_nondegenerate(self) -> bool:
        return gf2_rank(self.gram) == self.dim


@dataclass(frozen=True, eq=False)
class QuadraticRefinement:
    """q(x) = x^T U x over GF(2), polarizing to the standard pairing."""

    U: np.ndarray

    def __post_init__(self):
        U = _bits(self.U)
        n = U.shape[0]
        if U.shape != (n, n) or n % 2:
            raise DimensionMismatch("refinement matrix must be square of even size", shape=U.shape)
        if np.any(np.tril(U, -1)):
            raise InputError("refinement matrix must be upper triangular")
        if not np.array_equal(np.triu(U, 1), np.triu(standard_pairing(n // 2), 1)):
            raise InputError("off-diagonal part must equal the pairing")
        object.__setattr__(self, "U", U)

    @classmethod
    def from_values(cls, values) -> "QuadraticRefinement":
        """Refinement with q(e_i) = values[i]."""
        values = _bits(values)
        n = len(values)
        U = np.triu(standard_pairing(n // 2), 1)
        U[np.diag_indices(n)] = values
        return cls(U)

    @classmethod
    def standard(cls, g: int) -> "QuadraticRefinement":
        """The Arf-0 default: q vanishes on the symplectic basis."""
        return cls.from_values([0] * (2 * g))

    @property
    def space(self) -> Z2SymplecticSpace:
        return Z2SymplecticSpace(self.U.shape[0] // 2)

    def __call__(self, x) -> int:
        x = _bits(x)
        return int(x @ self.U @ x) & 1

    def to_json(self) -> dict:
        return {"values": [int(v) for v in np.diag(self.U)]}


def arf_invariant(q: QuadraticRefinement) -> int:
    """sum_i q(a_i) q(b_i) over the standard symplectic basis."""
    d = np.diag(q.U)
    return int(np.sum(d[0::2] & d[1::2])) & 1


def zero_count(q: QuadraticRefinement) -> int:
    return sum(1 for x in q.space.vectors() if q(x) == 0)


def expected_zero_count(g: int, arf: int) -> int:
    return 2 ** (2 * g - 1) + (-1) ** arf * 2 ** (g - 1)


def gf2_rank(M) -> int:
    A = _bits(M).copy()
    r = 0
    rows, cols = A.shape
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i, c]), None)
        if piv is None:
            continue
        A[[r, piv]] = A[[piv, r]]
        for i in range(rows):
            if i != r and A[i, c]:
                A[i] ^= A[r]
        r += 1
    return r


@dataclass(frozen=True, eq=False)
class NormMap:
    """Nm: GF(2)^(2 g_Sbar) -> GF(2)^(2 g_Sigma), adjoint to a pullback."""

    matrix: np.ndarray
    pull: np.ndarray

    @classmethod
    def adjoint_of(cls, pull) -> "NormMap":
        """Nm = J_Sigma pull^T J_Sbar, the unique adjoint of ``pull``."""
        pull = _bits(pull)
        nS, nSig = pull.shape
        Js, Jsig = standard_pairing(nS // 2), standard_pairing(nSig // 2)
        return cls((Jsig.astype(int) @ pull.T @ Js) % 2 & 1, pull)

    @classmethod
    def default(cls, g_sigma: int, g_sbar: int) -> "NormMap":
        """Adjoint of the coordinate embedding: a coordinate projection."""
        if g_sbar < g_sigma:
            raise DimensionMismatch("cover genus below base genus", g_sigma=g_sigma, g_sbar=g_sbar)
        pull = np.zeros((2 * g_sbar, 2 * g_sigma), dtype=np.uint8)
        pull[: 2 * g_sigma, : 2 * g_sigma] = np.eye(2 * g_sigma, dtype=np.uint8)
        return cls.adjoint_of(pull)

    def __call__(self, x) -> np.ndarray:
        return (self.matrix.astype(int) @ _bits(x)) % 2 & 1

    def adjoint_holds(self) -> bool:
        nS, nSig = self.pull.shape
        Js, Jsig = standard_pairing(nS // 2), standard_pairing(nSig // 2)
        lhs = (self.matrix.T.astype(int) @ Jsig) % 2
        rhs = (Js.astype(int) @ self.pull) % 2
        return bool(np.array_equal(lhs, rhs))


def omega_classes(L, q_sbar: QuadraticRefinement, q_sigma: QuadraticRefinement, Nm: NormMap):
    """(w1(W), w2(W)) = (Nm L, q_Sbar(L) + q_Sigma(Nm L))."""
    L = _bits(L)
    if L.shape[0] != q_sbar.U.shape[0] or Nm.matrix.shape != (q_sigma.U.shape[0], L.shape[0]):
        raise DimensionMismatch("dimensions of L, refinements and norm map disagree")
    w1 = Nm(L)
    return w1, (q_sbar(L) + q_sigma(w1)) & 1


def omega2_V(L, q_sbar, q_sigma, Nm, w2_V0prime: int, delta: int, q: int) -> int:
    """w2(V) = w2(W) + w2(V0') + delta over GF(2)."""
    if q <= 2 and w2_V0prime:
        raise RankRule("w2(V0') vanishes when q <= 2", q=q)
    _, w2W = omega_classes(L, q_sbar, q_sigma, Nm)
    return (w2W + w2_V0prime + delta) & 1


def whitney_additivity_check(w1V: int, w2V: int, w1W: int, w2W: int) -> int:
    """w2(V + W) = w2(V) + w2(W); the cup-square term vanishes on a surface."""
    if _bits(w1V).tolist() != _bits(w1W).tolist():
        raise FirstClassMismatch("w1(V) must equal w1(W)")
    return (int(w2V) + int(w2W)) & 1
