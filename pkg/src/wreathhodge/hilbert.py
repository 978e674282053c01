"""Hodge numbers of Hilbert schemes of points on surfaces, and the comparisons
with wreath-product orbifolds."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Union

from .orbifold import InputError, OrbifoldData, orbifold_hodge_poly, wreath_series_product
from .report import Report, compare_series, first_difference
from .series import BigradedPoly, Factor, SeriesQ, euler_product

__all__ = [
    "SurfaceHodge",
    "goettsche_series",
    "verify_samehodge",
    "verify_cor1",
    "read_surface_file",
]


@dataclass(frozen=True)
class SurfaceHodge:
    """Hodge table of a smooth surface (compactly supported for noncompact ones)."""

    hodge: BigradedPoly
    compact: bool = True
    name: str = ""

    def __post_init__(self):
        if not self.hodge.is_even_graded():
            raise InputError("surface %r: Hodge exponents must be integers" % self.name)
        for (s2, t2), h in self.hodge.items():
            if not (0 <= s2 <= 4 and 0 <= t2 <= 4):
                raise InputError("surface %r: bidegree (%d, %d) outside [0,2]x[0,2]" % (self.name, s2 // 2, t2 // 2))
            if h < 0:
                raise InputError("surface %r: negative Hodge number at (%d, %d)" % (self.name, s2 // 2, t2 // 2))
        if self.compact and self.hodge != self.hodge.transpose():
            raise InputError("surface %r is marked compact but violates h^{s,t} = h^{t,s}" % self.name)

    @classmethod
    def from_json(cls, data: dict) -> SurfaceHodge:
        if not isinstance(data, dict) or "hodge" not in data:
            raise InputError("surface description must be an object with a 'hodge' table")
        try:
            poly = BigradedPoly.from_table(data["hodge"])
        except (TypeError, ValueError) as exc:
            raise InputError("malformed hodge table: %s" % exc) from None
        return cls(poly, bool(data.get("compact", True)), data.get("name", ""))

    def to_json(self) -> dict:
        return {"name": self.name, "compact": self.compact, "hodge": self.hodge.table()}


def read_surface_file(path: Union[str, Path]) -> SurfaceHodge:
    with open(path) as fh:
        return SurfaceHodge.from_json(json.load(fh))


def goettsche_series(surface: SurfaceHodge, qmax: int) -> SeriesQ:
    """``sum_n e(X^[n]; x, y) q^n = prod_r prod_{s,t} (1 - x^s y^t q^r (xy)^{r-1})^{-e^{s,t}(X)}``."""
    e = surface.hodge.parity_signed()
    factors = [
        Factor(r, 0, s2 + 2 * (r - 1), t2 + 2 * (r - 1), c)
        for r in range(1, qmax + 1)
        for (s2, t2), c in e.items()
    ]
    return euler_product(factors, qmax)


def verify_samehodge(orb: OrbifoldData, surface: SurfaceHodge, qmax: int) -> Report:
    """Compare Hodge numbers of ``X^[n]`` with orbifold Hodge numbers of ``Y^n / G_n``."""
    if orb.dim != 2:
        raise InputError("Hilbert schemes of points are only modeled for surfaces (dim 2), got dim %d" % orb.dim)
    title = "h(%s^[n]) vs h(%s wreath orbifold), q <= %d" % (surface.name or "X", orb.name or "Y/G", qmax)
    h_orb = orbifold_hodge_poly(orb)
    mm = first_difference(surface.hodge, h_orb)
    if mm is not None:
        return Report(title, False, "e(X) != e(Y,G) at q^1, %s" % mm.describe())
    return compare_series(title, goettsche_series(surface, qmax), wreath_series_product(orb, qmax))


def verify_cor1(orb: OrbifoldData, x_orb: OrbifoldData, qmax: int) -> Report:
    """Compare ``h(X^n, S_n)`` with ``h(Y^n, G_n)`` given ``h(X) = h(Y, G)``."""
    for o in (orb, x_orb):
        if o.dim % 2:
            raise InputError("dimension must be even, got %d" % o.dim)
    if orb.dim != x_orb.dim:
        raise InputError("dimensions differ: %d vs %d" % (orb.dim, x_orb.dim))
    if len(x_orb.sectors) != 1 or any(c.shift for c in x_orb.untwisted.components):
        raise InputError("the resolution must be given as an untwisted (trivial group) orbifold")
    title = "h(X^n, S_n) vs h(Y^n, G_n), q <= %d" % qmax
    mm = first_difference(orbifold_hodge_poly(x_orb), orbifold_hodge_poly(orb))
    if mm is not None:
        return Report(title, False, "h(X) != h(Y,G) at q^1, %s" % mm.describe())
    return compare_series(title, wreath_series_product(x_orb, qmax), wreath_series_product(orb, qmax))
