"""Matrices over F[z] (or F(z)) and small dense linear algebra over F.

Entries of a :class:`Mat` are :class:`Poly` in polynomial mode or
:class:`RatFunc` in meromorphic mode.  Determinants use fraction-free
Bareiss elimination and characteristic polynomials use the division-free
Berkowitz recursion, so no rational-function blowup occurs on polynomial
input.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product

from .field import DEFAULT_FIELD, Field
from .poly import AuxPoly, Poly
from .ratfunc import RatFunc
from ..errors import InputError, NotSquare, ShapeMismatch


def _entry(v, F):
    if isinstance(v, (Poly, RatFunc)):
        return v
    if isinstance(v, (int, Fraction)):
        return Poly.const(v, F)
    raise InputError("unsupported matrix entry", value=repr(v))


class Mat:
    __slots__ = ("F", "rows", "nrows", "ncols")

    def __init__(self, rows, F: Field = DEFAULT_FIELD, ncols: int | None = None):
        rows = [list(r) for r in rows]
        self.F = F
        self.nrows = len(rows)
        self.ncols = len(rows[0]) if rows else (ncols or 0)
        if any(len(r) != self.ncols for r in rows):
            raise ShapeMismatch("ragged matrix rows")
        self.rows = tuple(tuple(_entry(v, F) for v in r) for r in rows)

    # constructors -----------------------------------------------------
    @classmethod
    def zeros(cls, n: int, m: int, F: Field = DEFAULT_FIELD) -> "Mat":
        z = Poly((), F)
        return cls([[z] * m for _ in range(n)], F, ncols=m)

    @classmethod
    def identity(cls, n: int, F: Field = DEFAULT_FIELD) -> "Mat":
        return cls.diag([1] * n, F)

    @classmethod
    def diag(cls, entries, F: Field = DEFAULT_FIELD) -> "Mat":
        entries = [_entry(e, F) for e in entries]
        n = len(entries)
        z = Poly((), F)
        return cls([[entries[i] if i == j else z for j in range(n)] for i in range(n)], F, ncols=n)

    @classmethod
    def from_columns(cls, cols, nrows: int, F: Field = DEFAULT_FIELD) -> "Mat":
        cols = [list(c) for c in cols]
        if not cols:
            return cls([[] for _ in range(nrows)], F, ncols=0) if nrows else cls([], F, ncols=0)
        return cls([[c[i] for c in cols] for i in range(nrows)], F, ncols=len(cols))

    @classmethod
    def block(cls, blocks, F: Field = DEFAULT_FIELD) -> "Mat":
        """Assemble from a grid of Mat blocks (None means a zero block)."""
        heights = [next(b.nrows for b in row if b is not None) for row in blocks]
        widths = [next(blocks[i][j].ncols for i in range(len(blocks)) if blocks[i][j] is not None)
                  for j in range(len(blocks[0]))]
        z = Poly((), F)
        out = []
        for bi, row in enumerate(blocks):
            for r in range(heights[bi]):
                line = []
                for bj, b in enumerate(row):
                    if b is None:
                        line.extend([z] * widths[bj])
                    else:
                        if b.shape != (heights[bi], widths[bj]):
                            raise ShapeMismatch("block sizes disagree")
                        line.extend(b.rows[r])
                out.append(line)
        return cls(out, F, ncols=sum(widths))

    @classmethod
    def blockdiag(cls, *mats, F: Field | None = None) -> "Mat":
        F = F or mats[0].F
        grid = [[m if i == j else cls.zeros(m.nrows, o.ncols, F) for j, o in enumerate(mats)]
                for i, m in enumerate(mats)]
        return cls.block(grid, F)

    def hstack(self, other: "Mat") -> "Mat":
        if self.nrows != other.nrows:
            raise ShapeMismatch("hstack row mismatch")
        return Mat([a + b for a, b in zip(self.rows, other.rows)], self.F,
                   ncols=self.ncols + other.ncols)

    def vstack(self, other: "Mat") -> "Mat":
        if self.ncols != other.ncols:
            raise ShapeMismatch("vstack column mismatch")
        return Mat(self.rows + other.rows, self.F, ncols=self.ncols)

    # access -----------------------------------------------------------
    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> tuple:
        return self.rows[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list:
        return [self.col(j) for j in range(self.ncols)]

    def submatrix(self, rows, cols) -> "Mat":
        rows, cols = list(rows), list(cols)
        return Mat([[self.rows[i][j] for j in cols] for i in rows], self.F, ncols=len(cols))

    @property
    def T(self) -> "Mat":
        return Mat([list(c) for c in zip(*self.rows)] if self.nrows else
                   [[] for _ in range(self.ncols)], self.F, ncols=self.nrows)

    def map(self, f) -> "Mat":
        return Mat([[f(a) for a in r] for r in self.rows], self.F, ncols=self.ncols)

    # arithmetic -------------------------------------------------------
    def _check_same(self, o):
        if self.shape != o.shape:
            raise ShapeMismatch("shape mismatch", left=self.shape, right=o.shape)

    def __add__(self, o: "Mat") -> "Mat":
        self._check_same(o)
        return Mat([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, o.rows)],
                   self.F, ncols=self.ncols)

    def __sub__(self, o: "Mat") -> "Mat":
        self._check_same(o)
        return Mat([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, o.rows)],
                   self.F, ncols=self.ncols)

    def __neg__(self) -> "Mat":
        return self.map(lambda a: -a)

    def scale(self, k) -> "Mat":
        k = _entry(k, self.F)
        return self.map(lambda a: a * k)

    def __matmul__(self, o: "Mat") -> "Mat":
        if self.ncols != o.nrows:
            raise ShapeMismatch("product shape mismatch", left=self.shape, right=o.shape)
        cols = o.columns()
        zero = Poly((), self.F)
        out = []
        for r in self.rows:
            line = []
            for c in cols:
                acc = zero
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                line.append(acc)
            out.append(line)
        return Mat(out, self.F, ncols=o.ncols)

    def apply(self, vec) -> list:
        return [sum((a * b for a, b in zip(r, vec) if a and b), Poly((), self.F)) for r in self.rows]

    # predicates -------------------------------------------------------
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_zero(self) -> bool:
        return all(not a for r in self.rows for a in r)

    def is_symmetric(self) -> bool:
        return self.is_square() and self == self.T

    def is_skew(self) -> bool:
        return self.is_square() and (self + self.T).is_zero() and \
            all(not self.rows[i][i] for i in range(self.nrows))

    def is_polynomial(self) -> bool:
        return all(isinstance(a, Poly) or a.is_poly() for r in self.rows for a in r)

    def polynomial(self) -> "Mat":
        """Convert RatFunc entries to Poly (ArithmeticError on a pole)."""
        return self.map(lambda a: a if isinstance(a, Poly) else a.to_poly())

    def rational(self) -> "Mat":
        return self.map(RatFunc.of)

    def is_unimodular(self) -> bool:
        """Polynomial entries and determinant a nonzero constant."""
        if not self.is_square() or not self.is_polynomial():
            return False
        d = self.polynomial().det()
        return bool(d) and d.is_constant()

    def __eq__(self, o):
        if not isinstance(o, Mat) or self.shape != o.shape:
            return False
        return all(RatFunc.of(a) == RatFunc.of(b) if type(a) is not type(b) else a == b
                   for r, s in zip(self.rows, o.rows) for a, b in zip(r, s))

    def __hash__(self):
        return hash((self.shape, tuple(RatFunc.of(a) for r in self.rows for a in r)))

    # evaluation -------------------------------------------------------
    def at(self, x) -> list:
        """Scalar matrix obtained by evaluating every entry at ``x``."""
        return [[a(x) for a in r] for r in self.rows]

    def derivative(self) -> "Mat":
        return self.polynomial().map(Poly.derivative)

    # determinant and characteristic polynomial ------------------------
    def det(self):
        if not self.is_square():
            raise NotSquare("determinant of a non-square matrix", shape=self.shape)
        if self.is_polynomial():
            return bareiss_det([[a if isinstance(a, Poly) else a.num for a in r]
                                for r in self.rows], self.F)
        rows, scale = [], RatFunc(Poly.const(1, self.F))
        for r in self.rows:
            d = Poly.const(1, self.F)
            for a in r:
                d = d.lcm(RatFunc.of(a).den)
            rows.append([(RatFunc.of(a) * d).to_poly() for a in r])
            scale = scale * RatFunc(Poly.const(1, self.F), d)
        return RatFunc(bareiss_det(rows, self.F)) * scale

    def charpoly(self, var: str = "eta") -> AuxPoly:
        """det(t*I - A) as a polynomial in ``var`` (division-free)."""
        if not self.is_square():
            raise NotSquare("characteristic polynomial of a non-square matrix", shape=self.shape)
        coeffs = berkowitz([list(r) for r in self.rows], self.F)
        out = [c if isinstance(c, Poly) else c.to_poly() for c in reversed(coeffs)]
        return AuxPoly(out, self.F, var)

    def inverse(self) -> "Mat":
        """Inverse over F(z); polynomial when the matrix is unimodular."""
        if not self.is_square():
            raise NotSquare("inverse of a non-square matrix", shape=self.shape)
        n = self.nrows
        one, zero = RatFunc(Poly.const(1, self.F)), RatFunc(Poly((), self.F))
        aug = [[RatFunc.of(a) for a in r] + [one if i == j else zero for j in range(n)]
               for i, r in enumerate(self.rows)]
        for k in range(n):
            piv = next((i for i in range(k, n) if aug[i][k]), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            aug[k], aug[piv] = aug[piv], aug[k]
            inv = aug[k][k].inv()
            aug[k] = [a * inv for a in aug[k]]
            for i in range(n):
                if i != k and aug[i][k]:
                    f = aug[i][k]
                    aug[i] = [a - f * b for a, b in zip(aug[i], aug[k])]
        out = Mat([r[n:] for r in aug], self.F, ncols=n)
        return out.polynomial() if out.is_polynomial() else out

    # text -------------------------------------------------------------
    def to_json(self) -> list:
        if self.nrows == 0:
            return []
        return [[a.to_json() for a in r] for r in self.rows]

    @classmethod
    def from_json(cls, data, F: Field = DEFAULT_FIELD, ncols: int | None = None) -> "Mat":
        if not isinstance(data, list) or any(not isinstance(r, list) for r in data):
            raise InputError("matrix must be a JSON array of rows")
        rows = [[RatFunc.from_json(a, F) if isinstance(a, dict) else Poly.from_json(a, F)
                 for a in r] for r in data]
        return cls(rows, F, ncols=ncols)

    def pretty(self) -> str:
        return "[" + "; ".join(", ".join(a.pretty() for a in r) for r in self.rows) + "]"

    def __repr__(self):
        return f"Mat{self.shape}{self.pretty()}"


def bareiss_det(rows, F: Field) -> Poly:
    """Fraction-free determinant of a square list-of-lists of Poly."""
    n = len(rows)
    one = Poly.const(1, F)
    if n == 0:
        return one
    M = [list(r) for r in rows]
    sign, prev = 1, one
    for k in range(n - 1):
        if not M[k][k]:
            piv = next((i for i in range(k + 1, n) if M[i][k]), None)
            if piv is None:
                return Poly((), F)
            M[k], M[piv] = M[piv], M[k]
            sign = -sign
        pk = M[k][k]
        for i in range(k + 1, n):
            mik = M[i][k]
            for j in range(k + 1, n):
                v = M[i][j] * pk - mik * M[k][j]
                M[i][j] = v if prev == one else v.exact_div(prev)
            M[i][k] = Poly((), F)
        prev = pk
    d = M[n - 1][n - 1]
    return -d if sign < 0 else d


def berkowitz(A, F: Field) -> list:
    """Coefficients [1, c1, ..., cn] (descending) of det(t*I - A)."""
    n = len(A)
    one, zero = Poly.const(1, F), Poly((), F)
    vec = [one]
    for k in range(n - 1, -1, -1):
        m = n - k
        R = A[k][k + 1:]
        S = [row[k + 1:] for row in A[k + 1:]]
        v = [A[i][k] for i in range(k + 1, n)]
        diags = [one, -A[k][k]]
        for _ in range(m - 1):
            diags.append(-_dot(R, v, zero))
            v = [_dot(row, v, zero) for row in S]
        vec = [_dot_rev(diags, vec, i, m, zero) for i in range(m + 1)]
    return vec


def _dot(a, b, zero):
    acc = zero
    for x, y in zip(a, b):
        if x and y:
            acc = acc + x * y
    return acc


def _dot_rev(diags, vec, i, m, zero):
    acc = zero
    for j in range(min(i, m - 1) + 1):
        d = diags[i - j]
        if d and vec[j]:
            acc = acc + d * vec[j]
    return acc


# dense linear algebra over the scalar field ---------------------------

def rref(rows, F: Field):
    """Reduced row echelon form of a scalar matrix; returns (R, pivot columns)."""
    M = [[F(a) for a in r] for r in rows]
    if not M:
        return M, []
    ncols = len(M[0])
    pivots, r = [], 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = F.inv(M[r][c])
        M[r] = [F.mul(a, inv) for a in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M, pivots


def rank(rows, F: Field) -> int:
    return len(rref(rows, F)[1])


def nullspace(rows, F: Field, ncols: int | None = None) -> list:
    """Basis of {v : rows @ v = 0}; each vector's last free coordinate is 1."""
    n = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    if not rows:
        return [[F.one if i == j else F.zero for i in range(n)] for j in range(n)]
    R, pivots = rref(rows, F)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [F.zero] * n
        v[f] = F.one
        for i, pc in enumerate(pivots):
            v[pc] = F.neg(R[i][f])
        basis.append(v)
    return basis


def matvec(rows, v, F: Field) -> list:
    out = []
    for r in rows:
        acc = F.zero
        for a, b in zip(r, v):
            acc = F.add(acc, F.mul(a, b))
        out.append(acc)
    return out


def bilinear(rows, u, v, F: Field):
    """u^T M v for a scalar matrix M."""
    acc = F.zero
    for i, r in enumerate(rows):
        if u[i]:
            for j, a in enumerate(r):
                acc = F.add(acc, F.mul(F.mul(u[i], a), v[j]))
    return acc


def minors(M: Mat, k: int):
    """Iterate all k x k minors of a polynomial matrix."""
    from itertools import combinations
    for rs, cs in product(combinations(range(M.nrows), k), combinations(range(M.ncols), k)):
        yield M.submatrix(rs, cs).det()
