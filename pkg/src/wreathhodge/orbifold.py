"""Sector data for global quotients ``Y/G`` and wreath-orbifold Hodge series.

Two independent routes compute ``sum_n e(Y^n, G_n; x, y) q^n``:

* :func:`wreath_series_product` expands the closed Euler product over the
  orbifold e-polynomial of ``Y/G``;
* :func:`wreath_series_direct` sums over the conjugacy types of every
  ``G_n`` and over the distribution of cycles among fixed components,
  taking graded symmetric powers by the cycle-index formula.

The two share no shift or expansion code.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from pathlib import Path
from typing import Iterable, Iterator, Sequence, Union

from .groups import FiniteGroup
from .series import BigradedPoly, Factor, SeriesQ, euler_product, sym_series
from .wreath_types import integer_partitions, partition_valued_functions

__all__ = [
    "InputError",
    "SectorComponent",
    "Sector",
    "OrbifoldData",
    "shift_from_weights",
    "wreath_shift",
    "orbifold_hodge_poly",
    "orbifold_e_poly",
    "symmetric_quotient_series",
    "wreath_series_product",
    "wreath_series_direct",
    "graded_sym_power",
    "random_orbifold",
    "read_orbifold_file",
]


class InputError(ValueError):
    """Malformed or inconsistent input data."""


def _parse_shift(value) -> int:
    if isinstance(value, bool):
        raise InputError("shift must be an integer, got %r" % value)
    if isinstance(value, int):
        shift = value
    elif isinstance(value, Fraction) and value.denominator == 1:
        shift = int(value)
    elif isinstance(value, float) and value.is_integer():
        shift = int(value)
    else:
        try:
            frac = Fraction(str(value))
        except (ValueError, ZeroDivisionError):
            raise InputError("shift must be an integer, got %r" % (value,)) from None
        if frac.denominator != 1:
            raise InputError("fractional shift %s is not supported; all shifts must be integers" % frac)
        shift = int(frac)
    if shift < 0:
        raise InputError("shift must be nonnegative, got %d" % shift)
    return shift


@dataclass(frozen=True)
class SectorComponent:
    """Hodge polynomial of one component quotient ``Y^c_a / Z(c)`` and its shift."""

    hodge: BigradedPoly
    shift: int = 0
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "shift", _parse_shift(self.shift))
        if not self.hodge.is_even_graded():
            raise InputError("component %r: Hodge exponents must be integers" % self.label)
        for (s2, t2), h in self.hodge.items():
            if h < 0:
                raise InputError(
                    "component %r: negative Hodge number %d at (%d, %d)" % (self.label, h, s2 // 2, t2 // 2)
                )
            if s2 < 0 or t2 < 0:
                raise InputError("component %r: negative exponent (%d, %d)" % (self.label, s2 // 2, t2 // 2))

    def twisted(self) -> BigradedPoly:
        return self.hodge.shift2(2 * self.shift, 2 * self.shift)


@dataclass(frozen=True)
class Sector:
    cls: str
    components: tuple[SectorComponent, ...]
    identity: bool = False


@dataclass(frozen=True)
class OrbifoldData:
    """Sector decomposition of ``Y/G`` for ``Y`` of even complex dimension ``dim``.

    The identity sector is stored first.  ``compact`` turns on the Hodge
    symmetry check ``h^{s,t} = h^{t,s}`` for every component.
    """

    dim: int
    sectors: tuple[Sector, ...]
    name: str = ""
    compact: bool = False

    def __post_init__(self):
        d = self.dim
        if isinstance(d, bool) or not isinstance(d, int) or d <= 0 or d % 2:
            raise InputError("dimension must be an even positive integer, got %r" % (d,))
        ident = [s for s in self.sectors if s.identity]
        if len(ident) != 1:
            raise InputError("exactly one sector must be marked as the identity class (found %d)" % len(ident))
        labels = [s.cls for s in self.sectors]
        if len(set(labels)) != len(labels):
            raise InputError("duplicate sector class labels")
        for comp in ident[0].components:
            if comp.shift != 0:
                raise InputError("identity-sector component %r has nonzero shift %d" % (comp.label, comp.shift))
        for sec in self.sectors:
            for comp in sec.components:
                for (s2, t2), _ in comp.hodge.items():
                    if s2 > 2 * d or t2 > 2 * d:
                        raise InputError(
                            "sector %s component %r: bidegree (%d, %d) exceeds dimension %d"
                            % (sec.cls, comp.label, s2 // 2, t2 // 2, d)
                        )
                if self.compact and comp.hodge != comp.hodge.transpose():
                    raise InputError(
                        "sector %s component %r violates Hodge symmetry h^{s,t} = h^{t,s}" % (sec.cls, comp.label)
                    )
        ordered = tuple(ident) + tuple(s for s in self.sectors if not s.identity)
        object.__setattr__(self, "sectors", ordered)

    @property
    def untwisted(self) -> Sector:
        return self.sectors[0]

    @property
    def class_labels(self) -> list[str]:
        return [s.cls for s in self.sectors]

    @classmethod
    def from_json(cls, data: dict) -> OrbifoldData:
        if not isinstance(data, dict):
            raise InputError("orbifold description must be a JSON object")
        for key in ("dim", "sectors"):
            if key not in data:
                raise InputError("orbifold description is missing %r" % key)
        sectors = []
        for i, sec in enumerate(data["sectors"]):
            try:
                comps = tuple(
                    SectorComponent(
                        BigradedPoly.from_table(c["hodge"]),
                        c.get("shift", 0),
                        c.get("label", ""),
                    )
                    for c in sec.get("components", [])
                )
                sectors.append(Sector(str(sec["class"]), comps, bool(sec.get("identity", False))))
            except (KeyError, TypeError) as exc:
                raise InputError("sector %d is malformed: %s" % (i, exc)) from None
        return cls(data["dim"], tuple(sectors), data.get("name", ""), bool(data.get("compact", False)))

    def to_json(self) -> dict:
        out = {"name": self.name, "dim": self.dim}
        if self.compact:
            out["compact"] = True
        out["sectors"] = [
            {
                "class": sec.cls,
                "identity": sec.identity,
                "components": [
                    {"label": c.label, "shift": c.shift, "hodge": c.hodge.table()} for c in sec.components
                ],
            }
            for sec in self.sectors
        ]
        return out


def read_orbifold_file(path: Union[str, Path]) -> OrbifoldData:
    with open(path) as fh:
        data = json.load(fh)
    return OrbifoldData.from_json(data)


def trivial_orbifold(hodge: BigradedPoly, dim: int, name: str = "", compact: bool = False) -> OrbifoldData:
    """``(X, trivial group)``: one untwisted sector carrying ``h(X)``."""
    return OrbifoldData(dim, (Sector("e", (SectorComponent(hodge, 0, name or "X"),), True),), name, compact)


def shift_from_weights(theta: Iterable[Union[Fraction, int, str]]) -> Fraction:
    """Sum of normalized rotation angles ``0 <= theta_j < 1``."""
    total = Fraction(0)
    for th in theta:
        v = Fraction(th)
        if not 0 <= v < 1:
            raise InputError("rotation weight %s is outside [0, 1)" % v)
        total += v
    return total


def wreath_shift(shift: int, r: int, d: int) -> int:
    """Shift of the r-cycle component built from a component with shift ``shift``."""
    if d % 2:
        raise InputError("dimension must be even")
    return shift + (r - 1) * d // 2


def orbifold_hodge_poly(orb: OrbifoldData) -> BigradedPoly:
    total = BigradedPoly()
    for sec in orb.sectors:
        for comp in sec.components:
            total = total + comp.twisted()
    return total


def orbifold_e_poly(orb: OrbifoldData) -> BigradedPoly:
    return orbifold_hodge_poly(orb).parity_signed()


def symmetric_quotient_series(orb: OrbifoldData, qmax: int) -> SeriesQ:
    """``sum_n e(Y^n / G_n) q^n``: symmetric powers of the invariant part ``h(Y/G)``."""
    quotient = BigradedPoly()
    for comp in orb.untwisted.components:
        quotient = quotient + comp.hodge
    return sym_series(quotient.parity_signed(), qmax)


def wreath_series_product(orb: OrbifoldData, qmax: int) -> SeriesQ:
    """Closed-form product ``prod_r prod_{s,t} (1 - x^s y^t q^r (xy)^{(r-1)d/2})^{-e^{s,t}}``."""
    e = orbifold_e_poly(orb)
    d = orb.dim

    def factors(qdeg: int, pdeg: int) -> Iterator[Factor]:
        if pdeg:
            return
        lift = (qdeg - 1) * d  # doubled exponent of (xy)^{(r-1)d/2}
        for (s2, t2), c in e.items():
            yield Factor(qdeg, 0, s2 + lift, t2 + lift, c)

    return euler_product(factors, qmax)


# direct summation over wreath types


def _power_sum(v: BigradedPoly, k: int) -> BigradedPoly:
    return BigradedPoly({(k * s2, k * t2): c for (s2, t2), c in v.items()})


@lru_cache(maxsize=None)
def graded_sym_power(v: BigradedPoly, m: int) -> BigradedPoly:
    """e-polynomial of the m-th graded symmetric power of a space with e-polynomial ``v``.

    Uses ``S^m = sum_{lambda |- m} p_lambda / z_lambda`` with power sums
    ``p_k(v) = v(x^k, y^k)``; odd classes carry negative coefficients, which
    makes the same formula compute exterior powers.
    """
    if m == 0:
        return BigradedPoly.one()
    mfact = factorial(m)
    acc = BigradedPoly()
    for lam in integer_partitions(m):
        mult: dict[int, int] = {}
        for part in lam:
            mult[part] = mult.get(part, 0) + 1
        z = 1
        for part, a in mult.items():
            z *= part**a * factorial(a)
        term = BigradedPoly.one()
        for part in lam:
            term = term * _power_sum(v, part)
        acc = acc + term * (mfact // z)
    out = {}
    for key, c in acc.items():
        q, rem = divmod(c, mfact)
        if rem:
            raise AssertionError("non-integral symmetric power coefficient")
        out[key] = q
    return BigradedPoly(out)


def _weak_compositions(m: int, k: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``m`` into ``k`` parts, lexicographic order."""
    if k == 0:
        if m == 0:
            yield ()
        return
    if k == 1:
        yield (m,)
        return
    for first in range(m + 1):
        for rest in _weak_compositions(m - first, k - 1):
            yield (first,) + rest


def _cycle_block(components: Sequence[SectorComponent], r: int, m: int, d: int) -> BigradedPoly:
    """Contribution of ``m`` r-cycles whose cycle-products lie in one class."""
    total = BigradedPoly()
    twisted = [
        comp.hodge.parity_signed().shift2(2 * wreath_shift(comp.shift, r, d), 2 * wreath_shift(comp.shift, r, d))
        for comp in components
    ]
    for dist in _weak_compositions(m, len(components)):
        term = BigradedPoly.one()
        for poly, k in zip(twisted, dist):
            if k:
                term = term * graded_sym_power(poly, k)
        total = total + term
    return total


def wreath_coefficient_direct(orb: OrbifoldData, n: int) -> BigradedPoly:
    """``e(Y^n, G_n; x, y)`` summed over the types of ``G_n``."""
    comps = [sec.components for sec in orb.sectors]
    total = BigradedPoly()
    for t in partition_valued_functions(range(len(comps)), n):
        term = BigradedPoly.one()
        for (c, r), m in sorted(t.entries.items()):
            term = term * _cycle_block(comps[c], r, m, orb.dim)
            if not term:
                break
        total = total + term
    return total


def wreath_series_direct(orb: OrbifoldData, qmax: int, group: FiniteGroup | None = None) -> SeriesQ:
    if group is not None and len(group.classes) != len(orb.sectors):
        raise InputError(
            "orbifold has %d sectors but %s has %d conjugacy classes"
            % (len(orb.sectors), group.name, len(group.classes))
        )
    return SeriesQ(qmax, 0, {(n, 0): wreath_coefficient_direct(orb, n) for n in range(qmax + 1)})


def random_orbifold(
    rng: random.Random,
    dim: int | None = None,
    max_classes: int = 3,
    max_entry: int = 3,
    even_only: bool = False,
) -> OrbifoldData:
    """Small random sector data, compact-style (symmetric tables).

    With ``even_only`` every bidegree has even total degree ``s + t``.
    """
    d = dim if dim is not None else rng.choice((2, 4))
    nclasses = rng.randint(1, max_classes)
    sectors = []
    for ci in range(nclasses):
        ident = ci == 0
        ncomp = rng.randint(1, 2) if ident else rng.randint(0, 2)
        comps = []
        for ai in range(ncomp):
            k = d if ident else rng.randint(0, d)
            terms = {}
            for s in range(k + 1):
                for t in range(s, k + 1):
                    if even_only and (s + t) % 2:
                        continue
                    h = rng.randint(0, max_entry)
                    terms[(2 * s, 2 * t)] = h
                    terms[(2 * t, 2 * s)] = h
            if ident and ai == 0:
                terms[(0, 0)] = max(terms[(0, 0)], 1)
            shift = 0 if ident else rng.randint(0, (d - k) // 2 + 1)
            comps.append(SectorComponent(BigradedPoly(terms), shift, "c%d.%d" % (ci, ai)))
        sectors.append(Sector("c%d" % ci, tuple(comps), ident))
    return OrbifoldData(d, tuple(sectors), "random", compact=True)
