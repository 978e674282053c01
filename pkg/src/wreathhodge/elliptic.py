"""Second-quantized elliptic genus product for wreath-product orbifolds.

A genus table holds the coefficients ``c(m, l)`` of ``sum c(m, l) q^m y^l``;
``l`` is stored doubled.  Series produced here use the ``y`` slot of
:class:`BigradedPoly` and leave ``x`` at exponent 0.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Mapping, Union

from .orbifold import InputError, OrbifoldData, orbifold_hodge_poly, wreath_series_product
from .report import Report, compare_series
from .series import BigradedPoly, Factor, SeriesQ, euler_product

__all__ = [
    "GenusTable",
    "TableDepthError",
    "chi_minus_y",
    "chi_y0",
    "dmvv_expand",
    "verify_q0_consistency",
    "read_genus_file",
]


class TableDepthError(InputError):
    pass


@dataclass(frozen=True)
class GenusTable:
    """``c(m, l2)`` for ``0 <= m <= depth``; rows up to ``depth`` that are absent are zero."""

    d: int
    coeffs: Mapping[tuple[int, int], int]
    depth: int
    name: str = ""

    def __post_init__(self):
        clean = {}
        for (m, l2), c in self.coeffs.items():
            if m < 0:
                raise InputError("genus coefficient with negative q-degree %d" % m)
            if m > self.depth:
                raise InputError("coefficient c(%d, .) lies beyond the declared depth %d" % (m, self.depth))
            if c:
                clean[(int(m), int(l2))] = clean.get((int(m), int(l2)), 0) + int(c)
        object.__setattr__(self, "coeffs", clean)

    def row(self, m: int) -> dict[int, int]:
        if m > self.depth:
            raise TableDepthError(
                "c(%d, .) is required but the genus table only provides m <= %d" % (m, self.depth)
            )
        return {l2: c for (mm, l2), c in self.coeffs.items() if mm == m}

    def as_series(self, qmax: int) -> SeriesQ:
        """``chi(q, y)`` itself, truncated at ``q^qmax``."""
        out: dict[tuple[int, int], BigradedPoly] = {}
        for (m, l2), c in self.coeffs.items():
            if m <= qmax:
                out[(m, 0)] = out.get((m, 0), BigradedPoly()) + BigradedPoly({(0, l2): c})
        return SeriesQ(qmax, 0, out)

    @classmethod
    def from_json(cls, data: dict) -> GenusTable:
        if not isinstance(data, dict) or "d" not in data or "coeffs" not in data:
            raise InputError("genus description must be an object with 'd' and 'coeffs'")
        coeffs: dict[tuple[int, int], int] = {}
        try:
            for m, l2, c in data["coeffs"]:
                coeffs[(int(m), int(l2))] = coeffs.get((int(m), int(l2)), 0) + int(c)
        except (TypeError, ValueError) as exc:
            raise InputError("malformed genus coefficient list: %s" % exc) from None
        depth = data.get("depth", max((m for m, _ in coeffs), default=0))
        return cls(int(data["d"]), coeffs, int(depth), data.get("name", ""))

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "d": self.d,
            "depth": self.depth,
            "coeffs": [[m, l2, c] for (m, l2), c in sorted(self.coeffs.items())],
        }


def read_genus_file(path: Union[str, Path]) -> GenusTable:
    with open(path) as fh:
        return GenusTable.from_json(json.load(fh))


def chi_minus_y(hodge: BigradedPoly, dim: int) -> BigradedPoly:
    """``y^{-dim/2} sum_{s,t} (-1)^t (-y)^s h^{s,t}`` as a polynomial in ``y``."""
    def term(s2: int, t2: int, h: int) -> tuple[int, int, int]:
        if s2 % 2 or t2 % 2:
            raise InputError("Hodge table must have integral bidegrees")
        sign = -1 if (s2 // 2 + t2 // 2) % 2 else 1
        return 0, s2 - dim, sign * h
    return hodge.map_terms(term)


def chi_y0(hodge: BigradedPoly, d: int, name: str = "") -> GenusTable:
    """The ``q = 0`` row of the elliptic genus from a Hodge table."""
    row = chi_minus_y(hodge, d)
    return GenusTable(d, {(0, t2): c for (_, t2), c in row.items()}, 0, name)


def dmvv_expand(table: GenusTable, pmax: int, qmax: int) -> SeriesQ:
    """``prod_{n>0, m>=0, l} (1 - p^n q^m y^l)^{-c(nm, l)}`` in the ``(qmax, pmax)`` box.

    Every contributing factor needs row ``c(nm, .)``; a table that is too
    shallow raises :class:`TableDepthError` before any expansion.
    """
    needed = pmax * qmax if pmax else 0
    if needed > table.depth:
        n, m = pmax, qmax
        raise TableDepthError(
            "factor p^%d q^%d needs c(%d, .) but the genus table only provides m <= %d"
            % (n, m, n * m, table.depth)
        )
    rows = {m: table.row(m) for m in range(needed + 1)}

    def factors() -> Iterator[Factor]:
        for n in range(1, pmax + 1):
            for m in range(qmax + 1):
                for l2, c in rows[n * m].items():
                    yield Factor(m, n, 0, l2, c)

    return euler_product(factors(), qmax, pmax)


def verify_q0_consistency(orb: OrbifoldData, pmax: int) -> Report:
    """Compare the ``q = 0`` product with the Hirzebruch specialization of the wreath Hodge series."""
    d = orb.dim
    side_a = dmvv_expand(chi_y0(orbifold_hodge_poly(orb), d), pmax, 0)
    product = wreath_series_product(orb, pmax)
    coeffs = {}
    for (n, _), e in product.items():
        coeffs[(0, n)] = chi_minus_y(e.parity_signed(), n * d)
    side_b = SeriesQ(0, pmax, coeffs)
    return compare_series("q=0 elliptic genus product vs chi_{-y} of wreath Hodge series, p <= %d" % pmax,
                          side_a, side_b)
