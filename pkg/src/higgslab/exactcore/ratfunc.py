"""Rational functions num/den in lowest terms with monic denominator."""
from __future__ import annotations

from fractions import Fraction

from .field import DEFAULT_FIELD, Field
from .poly import Poly
from ..errors import InputError


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None, F: Field | None = None):
        if not isinstance(num, Poly):
            num = Poly.const(num, F or DEFAULT_FIELD)
        if den is None:
            den = num.one_like()
        elif not isinstance(den, Poly):
            den = Poly.const(den, num.F)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            self.num, self.den = num, den.one_like()
            return
        if den.deg > 0:
            g = num.gcd(den)
            if g.deg > 0:
                num, den = num.exact_div(g), den.exact_div(g)
        k = num.F.inv(den.lc)
        self.num, self.den = num.scale(k), den.scale(k)

    @property
    def F(self) -> Field:
        return self.num.F

    @classmethod
    def of(cls, v, F: Field = DEFAULT_FIELD) -> "RatFunc":
        if isinstance(v, RatFunc):
            return v
        if isinstance(v, Poly):
            return cls(v)
        return cls(Poly.const(v, F))

    def is_poly(self) -> bool:
        return self.den.deg == 0

    def to_poly(self) -> Poly:
        if not self.is_poly():
            raise ArithmeticError("rational function has a pole")
        return self.num

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def pole_order_at(self, x) -> int:
        return self.den.valuation_at(x)

    def _other(self, o):
        if isinstance(o, RatFunc):
            return o
        if isinstance(o, Poly):
            return RatFunc(o)
        if isinstance(o, (int, Fraction)):
            return RatFunc(Poly.const(o, self.F))
        return None

    def __add__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inv(self) -> "RatFunc":
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, o):
        return self._other(o) * self.inv()

    def __call__(self, x):
        d = self.den(x)
        if not d:
            raise ZeroDivisionError("evaluation at a pole")
        return self.F.div(self.num(x), d)

    def __eq__(self, o):
        o = self._other(o)
        return o is not None and self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def to_json(self):
        if self.is_poly():
            return self.num.to_json()
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data, F: Field = DEFAULT_FIELD) -> "RatFunc":
        if isinstance(data, dict):
            if "num" not in data:
                raise InputError("rational function needs 'num'", value=data)
            return cls(Poly.from_json(data["num"], F), Poly.from_json(data.get("den", ["1"]), F))
        return cls(Poly.from_json(data, F))

    def pretty(self) -> str:
        if self.is_poly():
            return self.num.pretty()
        return f"({self.num.pretty()})/({self.den.pretty()})"

    def __repr__(self):
        return f"RatFunc({self.pretty()})"
