"""Closed-form genus, dimension and component counts.

All values are exact Python integers.  Table columns are fixed by
:data:`COLUMNS`; unsupported entries (fibre data for q >= 3) are empty.
"""
from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from .errors import InputError, Unsupported
from .langlands import stack_dimension
from .spectral import cover_genera

COLUMNS = (
    "p", "q", "g", "g_S", "g_Sbar", "g_C", "prym_dim", "fiber_exponent", "fiber_order",
    "torsor_exponent", "torsor_order", "degL", "stack_dim", "sp4_components", "consistent",
)


@dataclass(frozen=True)
class CensusParams:
    p: int
    q: int
    g: int
    degL: int | None = None

    def __post_init__(self):
        if self.p < 1 or self.q < 0 or self.g < 2:
            raise InputError("need p >= 1, q >= 0, g >= 2", p=self.p, q=self.q, g=self.g)


@dataclass(frozen=True)
class FiberOrder:
    exponent: int
    order: int
    prym_dim: int

    def to_json(self) -> dict:
        return {"exponent": self.exponent, "order": str(self.order), "prym_dim": self.prym_dim}


def fiber_exponent(p: int, g: int) -> int:
    return (4 * p * p + 2 * p) * (g - 1) + 1


def fiber_order(params: CensusParams) -> FiberOrder:
    """Finite part 2^((4p^2+2p)(g-1)+1); for q = 2 also the Prym dimension g_C - g."""
    p, q, g = params.p, params.q, params.g
    if q not in (1, 2):
        raise Unsupported("no closed form for this q; fibres mix abelian and non-abelian data "
                          "(see the langlands module)", q=q)
    e = fiber_exponent(p, g)
    prym = cover_genera(p, g).g_C - g if q == 2 else 0
    return FiberOrder(e, 2 ** e, prym)


def torsor_exponent(p: int, g: int) -> int:
    return 4 * p * (g - 1) - 1


def torsor_order(p: int, g: int) -> int:
    if p < 1 or g < 2:
        raise InputError("need p >= 1, g >= 2", p=p, g=g)
    return 2 ** torsor_exponent(p, g)


def exponent_decomposition_holds(p: int, g: int) -> bool:
    """2 g_Sbar + 4p(g-1) - 1 = (4p^2 + 2p)(g-1) + 1."""
    return 2 * cover_genera(p, g).g_Sbar + torsor_exponent(p, g) == fiber_exponent(p, g)


@dataclass(frozen=True)
class Sp4Counts:
    total: int
    hitchin: int
    middle: int
    rest: int

    @property
    def consistent(self) -> bool:
        return self.hitchin + self.middle + self.rest == self.total

    def to_json(self) -> dict:
        return {"total": self.total, "parts": [self.hitchin, self.middle, self.rest],
                "consistent": self.consistent}


def maximal_sp4_counts(g: int) -> Sp4Counts:
    """Components of the maximal Sp(4,R) moduli space.

    3 * 2^(2g) + 2g - 4 in total, split as 2^(2g) + (2g - 2) + 2(2^(2g) - 1).
    """
    if g < 2:
        raise InputError("need g >= 2", g=g)
    n = 2 ** (2 * g)
    return Sp4Counts(3 * n + 2 * g - 4, n, 2 * g - 2, 2 * (n - 1))


def default_degL(p: int, g: int) -> int:
    """deg K^p, the degree of the line bundle defining the double cover."""
    return 2 * p * (g - 1)


def census_row(params: CensusParams) -> dict:
    p, q, g = params.p, params.q, params.g
    gen = cover_genera(p, g)
    degL = params.degL if params.degL is not None else default_degL(p, g)
    try:
        fo = fiber_order(params)
    except Unsupported:
        fo = None
    gc = maximal_sp4_counts(g)
    consistent = gen.consistent and exponent_decomposition_holds(p, g) and gc.consistent
    return {
        "p": p, "q": q, "g": g,
        "g_S": gen.g_S, "g_Sbar": gen.g_Sbar, "g_C": gen.g_C,
        "prym_dim": fo.prym_dim if fo else None,
        "fiber_exponent": fo.exponent if fo else None,
        "fiber_order": fo.order if fo else None,
        "torsor_exponent": torsor_exponent(p, g),
        "torsor_order": torsor_order(p, g),
        "degL": degL,
        "stack_dim": stack_dimension(q, g, degL) if q >= 1 else None,
        "sp4_components": gc.total,
        "consistent": consistent,
    }


def _row(args):
    return census_row(CensusParams(*args))


def census_grid(p_values, q_values, g_values, degL: int | None = None,
                parallel: bool = False) -> list:
    """Rows for every (p, q, g), ordered lexicographically."""
    keys = [(p, q, g, degL) for p, q, g in product(sorted(p_values), sorted(q_values), sorted(g_values))]
    if parallel and keys:
        with ProcessPoolExecutor() as pool:
            return list(pool.map(_row, keys))
    return [_row(k) for k in keys]


def to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: "" if r[k] is None else r[k] for k in COLUMNS})
    return buf.getvalue()
