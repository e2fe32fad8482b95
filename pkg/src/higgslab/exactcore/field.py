"""Coefficient fields: a prime field F_l (odd l) or the rationals.

Scalars are plain Python values, ``int`` in ``range(l)`` for a prime field
and :class:`fractions.Fraction` for the rationals.  A :class:`Field` knows how
to normalize, combine, print and parse them, and carries the polynomial
kernel backend used by :class:`~higgslab.exactcore.poly.Poly`.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from sympy import isprime
from sympy.ntheory.residue_ntheory import sqrt_mod

from .. import kernels
from ..errors import InputError

DEFAULT_MODULUS = 1000003


class _RationalOps:
    """Kernel-compatible polynomial routines over Q (the modulus is ignored)."""

    @staticmethod
    def trim(a):
        n = len(a)
        while n and not a[n - 1]:
            n -= 1
        return a[:n]

    @classmethod
    def poly_add(cls, a, b, _p):
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return cls.trim(out)

    @classmethod
    def poly_sub(cls, a, b, _p):
        out = list(a) + [0] * max(0, len(b) - len(a))
        for i, c in enumerate(b):
            out[i] -= c
        return cls.trim(out)

    @classmethod
    def poly_mul(cls, a, b, _p):
        if not a or not b:
            return []
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return cls.trim(out)

    @classmethod
    def poly_divmod(cls, a, b, _p):
        if not b:
            raise ZeroDivisionError("polynomial division by zero")
        db = len(b) - 1
        if len(a) - 1 < db:
            return [], list(a)
        r = list(a)
        q = [Fraction(0)] * (len(a) - db)
        lead = b[-1]
        for k in range(len(a) - 1, db - 1, -1):
            c = r[k]
            if not c:
                continue
            c = c / lead
            q[k - db] = c
            off = k - db
            for j in range(db + 1):
                r[off + j] -= c * b[j]
        return cls.trim(q), cls.trim(r[:db])

    @staticmethod
    def poly_eval(a, x, _p):
        acc = Fraction(0)
        for c in reversed(a):
            acc = acc * x + c
        return acc


class Field:
    """A prime field F_l (``modulus`` an odd prime) or Q (``modulus=None``)."""

    __slots__ = ("modulus", "ops")

    def __init__(self, modulus: int | None = DEFAULT_MODULUS):
        if modulus is not None:
            modulus = int(modulus)
            if modulus <= 2 or not isprime(modulus):
                raise InputError("field modulus must be an odd prime",
                                 modulus=modulus)
            self.ops = kernels.for_modulus(modulus)
        else:
            self.ops = _RationalOps
        self.modulus = modulus

    # identity ---------------------------------------------------------
    @property
    def is_prime(self) -> bool:
        return self.modulus is not None

    @property
    def characteristic(self) -> int:
        return self.modulus or 0

    def __eq__(self, other):
        return isinstance(other, Field) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("Field", self.modulus))

    def __reduce__(self):
        return (Field, (self.modulus,))

    def __repr__(self):
        return f"Field({self.modulus})" if self.is_prime else "Field(None)"

    # scalars ----------------------------------------------------------
    @property
    def zero(self):
        return 0 if self.is_prime else Fraction(0)

    @property
    def one(self):
        return 1 if self.is_prime else Fraction(1)

    def __call__(self, v):
        """Normalize ``v`` (int, Fraction or decimal string) into the field."""
        if isinstance(v, str):
            return self.from_str(v)
        if self.is_prime:
            if isinstance(v, Fraction):
                return v.numerator * pow(v.denominator, -1, self.modulus) % self.modulus
            return int(v) % self.modulus
        return Fraction(v)

    def add(self, a, b):
        return (a + b) % self.modulus if self.is_prime else a + b

    def sub(self, a, b):
        return (a - b) % self.modulus if self.is_prime else a - b

    def mul(self, a, b):
        return a * b % self.modulus if self.is_prime else a * b

    def neg(self, a):
        return -a % self.modulus if self.is_prime else -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.modulus) if self.is_prime else 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def sqrt(self, a):
        """A square root of ``a`` in the field, or ``None``.

        The returned root is canonical: the smaller residue for F_l, the
        non-negative one over Q.
        """
        if self.is_prime:
            return sqrt_mod(a % self.modulus, self.modulus)
        if a < 0:
            return None
        n, d = _exact_isqrt(a.numerator), _exact_isqrt(a.denominator)
        if n is None or d is None:
            return None
        return Fraction(n, d)

    def sort_key(self, a):
        return a

    def random(self, rng, bound: int = 50):
        """Random element; over Q a small integer in [-bound, bound]."""
        if self.is_prime:
            return rng.randrange(self.modulus)
        return Fraction(rng.randint(-bound, bound))

    # roots ------------------------------------------------------------
    def roots(self, coeffs) -> list:
        """Distinct roots in the field of the polynomial with ascending ``coeffs``."""
        coeffs = list(coeffs)
        if len(coeffs) <= 1:
            return []
        if self.is_prime:
            return sorted(_prime_roots(tuple(coeffs), self.modulus))
        return sorted(_rational_roots(tuple(coeffs)))

    # text -------------------------------------------------------------
    def to_str(self, a) -> str:
        if self.is_prime:
            return str(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

    def from_str(self, s: str):
        try:
            return self(Fraction(s.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError("malformed scalar", value=s) from exc

    def to_json(self) -> dict:
        if self.is_prime:
            return {"type": "prime", "modulus": str(self.modulus)}
        return {"type": "rational"}

    @classmethod
    def from_json(cls, data: dict | None) -> "Field":
        if data is None:
            return cls()
        kind = data.get("type")
        if kind == "prime":
            return cls(int(data.get("modulus", DEFAULT_MODULUS)))
        if kind == "rational":
            return cls(None)
        raise InputError("unknown field type", type=kind)


RATIONALS = Field(None)
DEFAULT_FIELD = Field(DEFAULT_MODULUS)


def _exact_isqrt(n: int):
    from math import isqrt
    r = isqrt(n)
    return r if r * r == n else None


@lru_cache(maxsize=512)
def _prime_roots(coeffs: tuple, p: int) -> tuple:
    from sympy.polys.domains import ZZ
    from sympy.polys.galoistools import gf_factor_sqf, gf_from_int_poly, gf_sqf_part

    f = gf_from_int_poly(list(reversed(coeffs)), p)
    f = gf_sqf_part(f, p, ZZ)
    out = []
    for fac in gf_factor_sqf(f, p, ZZ, method="zassenhaus")[1]:
        if len(fac) == 2:
            out.append(int(-fac[1] * pow(int(fac[0]), -1, p)) % p)
    return tuple(out)


@lru_cache(maxsize=512)
def _rational_roots(coeffs: tuple) -> tuple:
    from sympy import Poly, QQ, Symbol

    x = Symbol("x")
    poly = Poly(list(reversed(coeffs)), x, domain=QQ)
    return tuple(Fraction(int(r.p), int(r.q)) for r in poly.ground_roots())
