"""Univariate polynomials in the chart coordinate ``z``.

:class:`Poly` holds an ascending, trimmed coefficient tuple over a
:class:`~higgslab.exactcore.field.Field`; the zero polynomial has no
coefficients.  :class:`AuxPoly` is a polynomial in an auxiliary variable
(``eta``, ``xi`` or ``zeta``) whose coefficients are :class:`Poly`.
"""
from __future__ import annotations

from fractions import Fraction

from .field import DEFAULT_FIELD, Field
from ..errors import InputError


class Poly:
    __slots__ = ("F", "c", "_hash")

    def __init__(self, coeffs=(), F: Field = DEFAULT_FIELD, *, _raw=False):
        self.F = F
        if _raw:
            self.c = coeffs
        else:
            vals = [F(v) for v in coeffs]
            n = len(vals)
            while n and not vals[n - 1]:
                n -= 1
            self.c = tuple(vals[:n])
        self._hash = None

    @classmethod
    def _wrap(cls, coeffs, F):
        return cls(tuple(coeffs), F, _raw=True)

    # constructors -----------------------------------------------------
    @classmethod
    def const(cls, v, F: Field = DEFAULT_FIELD) -> "Poly":
        return cls((v,), F)

    @classmethod
    def z(cls, F: Field = DEFAULT_FIELD) -> "Poly":
        return cls((0, 1), F)

    @classmethod
    def from_roots(cls, roots, F: Field = DEFAULT_FIELD, lead=1) -> "Poly":
        out = cls.const(lead, F)
        for r in roots:
            out = out * cls((F.neg(F(r)), 1), F)
        return out

    def zero_like(self) -> "Poly":
        return Poly._wrap((), self.F)

    def one_like(self) -> "Poly":
        return Poly._wrap((self.F.one,), self.F)

    def lift(self, v) -> "Poly":
        """Coerce a scalar or Poly into this polynomial's field."""
        if isinstance(v, Poly):
            return v
        return Poly((v,), self.F)

    # queries ----------------------------------------------------------
    @property
    def deg(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.c) - 1

    @property
    def lc(self):
        return self.c[-1] if self.c else self.F.zero

    def is_zero(self) -> bool:
        return not self.c

    def is_constant(self) -> bool:
        return len(self.c) <= 1

    def __bool__(self):
        return bool(self.c)

    def coeff(self, k: int):
        return self.c[k] if 0 <= k < len(self.c) else self.F.zero

    # arithmetic -------------------------------------------------------
    def _other(self, o):
        if isinstance(o, Poly):
            return o
        if isinstance(o, (int, Fraction)):
            return Poly((o,), self.F)
        return None

    def __add__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return Poly._wrap(self.F.ops.poly_add(list(self.c), list(o.c), self.F.modulus), self.F)

    __radd__ = __add__

    def __sub__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return Poly._wrap(self.F.ops.poly_sub(list(self.c), list(o.c), self.F.modulus), self.F)

    def __rsub__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Poly._wrap(tuple(self.F.neg(a) for a in self.c), self.F)

    def __mul__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        if len(o.c) == 1:
            k = o.c[0]
            return Poly._wrap(tuple(self.F.mul(a, k) for a in self.c), self.F)
        return Poly._wrap(self.F.ops.poly_mul(list(self.c), list(o.c), self.F.modulus), self.F)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out, base = self.one_like(), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, o):
        o = self._other(o)
        q, r = self.F.ops.poly_divmod(list(self.c), list(o.c), self.F.modulus)
        return Poly._wrap(q, self.F), Poly._wrap(r, self.F)

    def __floordiv__(self, o):
        return divmod(self, o)[0]

    def __mod__(self, o):
        return divmod(self, o)[1]

    def exact_div(self, o) -> "Poly":
        q, r = divmod(self, o)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def scale(self, k) -> "Poly":
        return self * Poly((k,), self.F)

    def monic(self) -> "Poly":
        if not self.c:
            return self
        return self.scale(self.F.inv(self.lc))

    def derivative(self) -> "Poly":
        F = self.F
        return Poly(tuple(F.mul(F(i), a) for i, a in enumerate(self.c))[1:], F)

    def __call__(self, x):
        """Evaluate at a field scalar, or compose with a Poly."""
        if isinstance(x, Poly):
            out = x.zero_like()
            for a in reversed(self.c):
                out = out * x + Poly._wrap((a,), self.F) if a else out * x
            return out
        return self.F.ops.poly_eval(list(self.c), self.F(x), self.F.modulus)

    def gcd(self, o: "Poly") -> "Poly":
        """Monic gcd (zero if both are zero)."""
        a, b = self, o
        while b:
            a, b = b, a % b
        return a.monic()

    def xgcd(self, o: "Poly"):
        """(g, s, t) with s*self + t*o = g monic."""
        r0, r1 = self, o
        s0, s1 = self.one_like(), self.zero_like()
        t0, t1 = self.zero_like(), self.one_like()
        while r1:
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if not r0:
            return r0, s0, t0
        k = self.F.inv(r0.lc)
        return r0.scale(k), s0.scale(k), t0.scale(k)

    def lcm(self, o: "Poly") -> "Poly":
        if not self or not o:
            return self.zero_like()
        return (self * o).exact_div(self.gcd(o)).monic()

    def roots(self) -> list:
        return self.F.roots(self.c)

    def valuation_at(self, x) -> int:
        """Order of vanishing at the scalar ``x``."""
        if not self:
            raise InputError("valuation of the zero polynomial")
        lin = Poly((self.F.neg(self.F(x)), 1), self.F)
        n, f = 0, self
        while True:
            q, r = divmod(f, lin)
            if r:
                return n
            n, f = n + 1, q

    # comparison -------------------------------------------------------
    def __eq__(self, o):
        if isinstance(o, Poly):
            return self.c == o.c and self.F == o.F
        o = self._other(o)
        return o is not None and self.c == o.c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.c, self.F.modulus))
        return self._hash

    def sort_key(self):
        return (self.deg, tuple(reversed(self.c)))

    # text -------------------------------------------------------------
    def to_json(self) -> list:
        return [self.F.to_str(a) for a in self.c]

    @classmethod
    def from_json(cls, data, F: Field = DEFAULT_FIELD) -> "Poly":
        if isinstance(data, (int, str)):
            data = [data]
        if not isinstance(data, list):
            raise InputError("polynomial must be a JSON array", value=data)
        return cls(tuple(F.from_str(str(s)) for s in data), F)

    def __str__(self):
        return self.pretty()

    def pretty(self, var: str = "z") -> str:
        if not self.c:
            return "0"
        terms = []
        for k in range(len(self.c) - 1, -1, -1):
            a = self.c[k]
            if not a:
                continue
            s = self.F.to_str(a)
            if k == 0:
                terms.append(s)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                terms.append(mono if s == "1" else f"{s}*{mono}")
        return " + ".join(terms)

    def __repr__(self):
        return f"Poly({self.pretty()})"


class AuxPoly:
    """Polynomial in an auxiliary variable with :class:`Poly` coefficients."""

    __slots__ = ("F", "c", "var")

    def __init__(self, coeffs, F: Field = DEFAULT_FIELD, var: str = "eta"):
        cs = [c if isinstance(c, Poly) else Poly.const(c, F) for c in coeffs]
        n = len(cs)
        while n and not cs[n - 1]:
            n -= 1
        self.c = tuple(cs[:n])
        self.F = F
        self.var = var

    @classmethod
    def monomial(cls, k: int, F: Field = DEFAULT_FIELD, var: str = "eta") -> "AuxPoly":
        zero = Poly((), F)
        return cls([zero] * k + [Poly.const(1, F)], F, var)

    @property
    def deg(self) -> int:
        return len(self.c) - 1

    @property
    def lc(self) -> Poly:
        return self.c[-1] if self.c else Poly((), self.F)

    def coeff(self, k: int) -> Poly:
        return self.c[k] if 0 <= k < len(self.c) else Poly((), self.F)

    def is_zero(self) -> bool:
        return not self.c

    def _other(self, o):
        if isinstance(o, AuxPoly):
            return o
        if isinstance(o, Poly):
            return AuxPoly([o], self.F, self.var)
        return AuxPoly([Poly.const(o, self.F)], self.F, self.var)

    def __add__(self, o):
        o = self._other(o)
        n = max(len(self.c), len(o.c))
        return AuxPoly([self.coeff(k) + o.coeff(k) for k in range(n)], self.F, self.var)

    __radd__ = __add__

    def __neg__(self):
        return AuxPoly([-a for a in self.c], self.F, self.var)

    def __sub__(self, o):
        return self + (-self._other(o))

    def __mul__(self, o):
        o = self._other(o)
        if not self.c or not o.c:
            return AuxPoly([], self.F, self.var)
        out = [Poly((), self.F)] * (len(self.c) + len(o.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    if b:
                        out[i + j] = out[i + j] + a * b
        return AuxPoly(out, self.F, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = AuxPoly([Poly.const(1, self.F)], self.F, self.var)
        for _ in range(n):
            out = out * self
        return out

    def derivative(self) -> "AuxPoly":
        return AuxPoly([a.scale(self.F(k)) for k, a in enumerate(self.c)][1:], self.F, self.var)

    def substitute_power(self, k: int) -> "AuxPoly":
        """Replace the variable t by t**k."""
        out = [Poly((), self.F)] * (k * max(len(self.c) - 1, 0) + 1)
        for i, a in enumerate(self.c):
            out[k * i] = a
        return AuxPoly(out, self.F, self.var)

    def at_z(self, x) -> list:
        """Coefficients (ascending) after evaluating every Poly coefficient at ``x``."""
        return [a(x) for a in self.c]

    def __call__(self, t):
        """Evaluate at a Poly (or scalar) value of the auxiliary variable."""
        t = t if isinstance(t, Poly) else Poly.const(t, self.F)
        out = Poly((), self.F)
        for a in reversed(self.c):
            out = out * t + a
        return out

    def __eq__(self, o):
        if not isinstance(o, AuxPoly):
            o = self._other(o)
        return self.c == o.c

    def __hash__(self):
        return hash(self.c)

    def to_json(self) -> list:
        return [a.to_json() for a in self.c]

    @classmethod
    def from_json(cls, data, F: Field = DEFAULT_FIELD, var: str = "eta") -> "AuxPoly":
        return cls([Poly.from_json(a, F) for a in data], F, var)

    def pretty(self) -> str:
        if not self.c:
            return "0"
        terms = []
        for k in range(len(self.c) - 1, -1, -1):
            a = self.c[k]
            if not a:
                continue
            mono = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            body = a.pretty()
            if not mono:
                terms.append(f"({body})" if len(a.c) > 1 else body)
            elif body == "1":
                terms.append(mono)
            else:
                terms.append(f"({body})*{mono}")
        return " + ".join(terms)

    def __repr__(self):
        return f"AuxPoly({self.pretty()})"
