"""Weight bookkeeping and the quadratic bundle value type.

Powers of K are invisible in chart arithmetic, so each bundle carries the
K-weights of its chart basis plus a ``twist`` correcting the determinant
when the basis came from a normal form rather than from a splitting.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactcore import DEFAULT_FIELD, Field, Mat


def _frac(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


@dataclass(frozen=True)
class BundleMeta:
    weights: tuple
    twist: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(_frac(w) for w in self.weights))
        object.__setattr__(self, "twist", _frac(self.twist))

    @property
    def rank(self) -> int:
        return len(self.weights)

    @property
    def det_weight(self) -> Fraction:
        return sum(self.weights, Fraction(0)) + self.twist

    def shifted(self, k) -> "BundleMeta":
        return BundleMeta(tuple(w + _frac(k) for w in self.weights), self.twist)

    def __add__(self, other: "BundleMeta") -> "BundleMeta":
        return BundleMeta(self.weights + other.weights, self.twist + other.twist)

    def to_json(self) -> dict:
        out = {"weights": [str(w) for w in self.weights]}
        if self.twist:
            out["twist"] = str(self.twist)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "BundleMeta":
        return cls(tuple(Fraction(str(w)) for w in data.get("weights", [])),
                   Fraction(str(data.get("twist", "0"))))

    @classmethod
    def flat(cls, rank: int, det_weight=0) -> "BundleMeta":
        """Rank-``rank`` metadata whose only content is the determinant weight."""
        return cls((Fraction(0),) * rank, _frac(det_weight))


@dataclass(frozen=True)
class QuadraticBundle:
    """(V0, Q0): a symmetric form whose determinant is a unit times a_p.

    ``basis`` optionally records the inclusion of V0 into an ambient bundle.
    """

    Q0: Mat
    meta: BundleMeta
    basis: Mat | None = None

    @property
    def rank(self) -> int:
        return self.Q0.nrows

    @property
    def field(self) -> Field:
        return self.Q0.F

    def to_json(self) -> dict:
        return {"Q0": self.Q0.to_json(), "V0": self.meta.to_json()}

    @classmethod
    def from_json(cls, data: dict, F: Field = DEFAULT_FIELD) -> "QuadraticBundle":
        Q0 = Mat.from_json(data["Q0"], F)
        meta = BundleMeta.from_json(data.get("V0", {})) if "V0" in data else \
            BundleMeta.flat(Q0.nrows, data.get("det_weight", 0))
        return cls(Q0, meta)
