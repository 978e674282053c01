"""Finite groups given by multiplication tables, and explicit wreath products.

Elements are integers ``0 .. order-1`` with the identity pinned to 0.  The
wreath product ``G wr S_n`` is built as a group whose elements are pairs
``(g, s)`` of an n-tuple over ``G`` and a permutation of ``range(n)``,
enumerated lexicographically, with ``(g, s)(h, t) = (g . s(h), st)`` and
``s(h)_i = h_{s^-1(i)}``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property
from math import factorial
from pathlib import Path
from typing import Iterable, Sequence, Union

__all__ = [
    "GroupError",
    "WreathSizeError",
    "ConjugacyClass",
    "FiniteGroup",
    "WreathElement",
    "WreathProduct",
    "load_group",
    "read_group_file",
    "conjugacy_classes",
    "build_wreath",
    "type_of",
    "trivial_group",
    "cyclic_group",
    "symmetric_group",
    "dihedral_group",
    "DEFAULT_ELEMENT_CAP",
]

DEFAULT_ELEMENT_CAP = 10**6


class GroupError(ValueError):
    """Raised for a multiplication table that does not define a group."""


class WreathSizeError(ValueError):
    pass


@dataclass(frozen=True)
class ConjugacyClass:
    representative: int
    members: frozenset[int]
    centralizer_order: int

    @property
    def size(self) -> int:
        return len(self.members)


class FiniteGroup:
    """A finite group with elements ``0 .. order-1`` and identity 0.

    Subclasses may override :meth:`multiply`, :meth:`inverse` and
    :meth:`generators` instead of supplying a table.
    """

    identity = 0

    def __init__(self, mul: Sequence[Sequence[int]] | None, name: str = ""):
        self.name = name
        self._mul = None if mul is None else [tuple(int(v) for v in row) for row in mul]
        if self._mul is not None:
            self.order = len(self._mul)
            self._inv = [row.index(0) for row in self._mul]

    @property
    def mul(self) -> list[tuple[int, ...]]:
        if self._mul is None:
            self._mul = [
                tuple(self.multiply(a, b) for b in range(self.order)) for a in range(self.order)
            ]
        return self._mul

    def multiply(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inverse(self, a: int) -> int:
        return self._inv[a]

    def conjugate(self, g: int, x: int) -> int:
        """``g x g^-1``."""
        return self.multiply(self.multiply(g, x), self.inverse(g))

    def generators(self) -> Iterable[int]:
        return range(1, self.order)

    def elements(self) -> range:
        return range(self.order)

    @cached_property
    def classes(self) -> list[ConjugacyClass]:
        """Conjugation orbits ordered by least member, which is the representative."""
        gens = list(self.generators())
        seen: set[int] = set()
        out = []
        for x in range(self.order):
            if x in seen:
                continue
            orbit = {x}
            frontier = [x]
            while frontier:
                y = frontier.pop()
                for g in gens:
                    z = self.conjugate(g, y)
                    if z not in orbit:
                        orbit.add(z)
                        frontier.append(z)
            seen |= orbit
            if self.order % len(orbit):
                raise AssertionError("orbit size does not divide the group order")
            out.append(ConjugacyClass(x, frozenset(orbit), self.order // len(orbit)))
        return out

    @cached_property
    def _class_index(self) -> list[int]:
        idx = [0] * self.order
        for i, cls in enumerate(self.classes):
            for m in cls.members:
                idx[m] = i
        return idx

    def class_index(self, g: int) -> int:
        """Position in :attr:`classes` of the class containing ``g``."""
        return self._class_index[g]

    def class_rep(self, g: int) -> int:
        return self.classes[self._class_index[g]].representative

    def centralizer_order(self, g: int) -> int:
        return self.classes[self._class_index[g]].centralizer_order

    def centralizer(self, g: int) -> list[int]:
        """Brute-force centralizer: every element commuting with ``g``."""
        return [h for h in range(self.order) if self.multiply(h, g) == self.multiply(g, h)]

    def __repr__(self) -> str:
        return "FiniteGroup(%r, order=%d)" % (self.name, self.order)


def load_group(table: Union[dict, Sequence[Sequence[int]]], name: str = "") -> FiniteGroup:
    """Validate a multiplication table and return the group.

    ``table`` is either a bare square table or a mapping with keys
    ``name``, ``order`` and ``mul``.
    """
    if isinstance(table, dict):
        name = table.get("name", name)
        mul = table.get("mul")
        if mul is None:
            raise GroupError("group description has no 'mul' table")
        declared = table.get("order")
    else:
        mul = table
        declared = None

    k = len(mul)
    if k == 0:
        raise GroupError("empty multiplication table")
    if declared is not None and declared != k:
        raise GroupError("declared order %d but table has %d rows" % (declared, k))
    for i, row in enumerate(mul):
        if len(row) != k:
            raise GroupError("table is not square: row %d has length %d, expected %d" % (i, len(row), k))
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < k:
                raise GroupError("entry mul[%d][%d] = %r is out of range 0..%d" % (i, j, v, k - 1))

    for a in range(k):
        if mul[0][a] != a or mul[a][0] != a:
            raise GroupError("index 0 is not a two-sided identity (fails at element %d)" % a)

    for a in range(k):
        if 0 not in mul[a]:
            raise GroupError("element %d has no inverse" % a)
        b = list(mul[a]).index(0)
        if mul[b][a] != 0:
            raise GroupError("element %d has a right inverse %d that is not a left inverse" % (a, b))

    for a in range(k):
        ra = mul[a]
        for b in range(k):
            ab = ra[b]
            rab = mul[ab]
            rb = mul[b]
            for c in range(k):
                if rab[c] != ra[rb[c]]:
                    raise GroupError("table is not associative: (%d*%d)*%d != %d*(%d*%d)" % (a, b, c, a, b, c))

    return FiniteGroup(mul, name)


def read_group_file(path: Union[str, Path]) -> FiniteGroup:
    path = Path(path)
    with open(path) as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise GroupError("%s: expected a JSON object" % path)
    return load_group(data, name=data.get("name", path.stem))


def conjugacy_classes(group: FiniteGroup) -> list[ConjugacyClass]:
    return group.classes


# built-in groups


def _table_from(elements: list, op, name: str) -> FiniteGroup:
    index = {e: i for i, e in enumerate(elements)}
    mul = [[index[op(a, b)] for b in elements] for a in elements]
    return FiniteGroup(mul, name)


def trivial_group() -> FiniteGroup:
    return FiniteGroup([[0]], "1")


def cyclic_group(k: int) -> FiniteGroup:
    return FiniteGroup([[(a + b) % k for b in range(k)] for a in range(k)], "Z%d" % k)


def symmetric_group(k: int) -> FiniteGroup:
    perms = list(itertools.permutations(range(k)))
    return _table_from(perms, lambda s, t: tuple(s[t[i]] for i in range(k)), "S%d" % k)


def dihedral_group(k: int) -> FiniteGroup:
    """Symmetries of a regular k-gon, order ``2k``; elements ``(flip, rotation)``."""
    elements = [(f, r) for f in range(2) for r in range(k)]

    def op(a, b):
        fa, ra = a
        fb, rb = b
        return ((fa + fb) % 2, (ra + (-rb if fa else rb)) % k)

    return _table_from(elements, op, "D%d" % k)


# wreath products


@dataclass(frozen=True)
class WreathElement:
    """``(g, s)`` with ``g`` an n-tuple over G and ``s`` a 0-based permutation."""

    g: tuple[int, ...]
    s: tuple[int, ...]

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles ``(i1, i2, ...)`` of ``s`` with ``s(i_k) = i_{k+1}``."""
        seen = [False] * len(self.s)
        out = []
        for start in range(len(self.s)):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i)
                i = self.s[i]
            out.append(tuple(cyc))
        return out

    def cycle_notation(self) -> str:
        """1-based cycle notation, fixed points omitted."""
        parts = ["(%s)" % " ".join(str(i + 1) for i in c) for c in self.cycles() if len(c) > 1]
        return "".join(parts) or "()"


def wreath_multiply(group: FiniteGroup, a: WreathElement, b: WreathElement) -> WreathElement:
    n = len(a.s)
    s_inv = [0] * n
    for i, si in enumerate(a.s):
        s_inv[si] = i
    g = tuple(group.multiply(a.g[i], b.g[s_inv[i]]) for i in range(n))
    st = tuple(a.s[b.s[i]] for i in range(n))
    return WreathElement(g, st)


def wreath_inverse(group: FiniteGroup, a: WreathElement) -> WreathElement:
    # (g, s)^-1 = (s^-1(g^-1), s^-1)
    n = len(a.s)
    s_inv = [0] * n
    for i, si in enumerate(a.s):
        s_inv[si] = i
    ginv = [group.inverse(x) for x in a.g]
    # s^-1(h)_i = h_{s(i)}
    return WreathElement(tuple(ginv[a.s[i]] for i in range(n)), tuple(s_inv))


class WreathProduct(FiniteGroup):
    """``G wr S_n`` with elements indexed lexicographically on ``(g, s)``."""

    def __init__(self, base: FiniteGroup, n: int):
        self.base = base
        self.n = n
        self.perms = list(itertools.permutations(range(n)))
        self._perm_rank = {p: i for i, p in enumerate(self.perms)}
        self._nfact = len(self.perms)
        super().__init__(None, "%s wr S%d" % (base.name, n))
        self.order = base.order**n * self._nfact

    def element(self, index: int) -> WreathElement:
        gi, si = divmod(index, self._nfact)
        k = self.base.order
        g = []
        for _ in range(self.n):
            gi, r = divmod(gi, k)
            g.append(r)
        return WreathElement(tuple(reversed(g)), self.perms[si])

    def index(self, a: WreathElement) -> int:
        gi = 0
        for x in a.g:
            gi = gi * self.base.order + x
        return gi * self._nfact + self._perm_rank[a.s]

    def multiply(self, a: int, b: int) -> int:
        return self.index(wreath_multiply(self.base, self.element(a), self.element(b)))

    def inverse(self, a: int) -> int:
        return self.index(wreath_inverse(self.base, self.element(a)))

    def generators(self) -> list[int]:
        n = self.n
        ident = tuple(range(n))
        gens = []
        for h in range(1, self.base.order):
            gens.append(self.index(WreathElement((h,) + (0,) * (n - 1), ident)))
        if n > 1:
            swap = (1, 0) + tuple(range(2, n))
            gens.append(self.index(WreathElement((0,) * n, swap)))
            cycle = tuple((i + 1) % n for i in range(n))
            gens.append(self.index(WreathElement((0,) * n, cycle)))
        return gens

    def type_of(self, index: int):
        return type_of(self.base, self.element(index))


def build_wreath(group: FiniteGroup, n: int, cap: int = DEFAULT_ELEMENT_CAP) -> WreathProduct:
    if n < 1:
        raise ValueError("n must be a positive integer")
    order = group.order**n * factorial(n)
    if order > cap:
        raise WreathSizeError(
            "%s wr S%d has order %d, above the element cap %d" % (group.name, n, order, cap)
        )
    return WreathProduct(group, n)


def cycle_product(group: FiniteGroup, a: WreathElement, cycle: Sequence[int]) -> int:
    """``g_{i_r} ... g_{i_1}`` for the cycle ``(i_1, ..., i_r)``."""
    out = group.identity
    for i in cycle:
        out = group.multiply(a.g[i], out)
    return out


def type_of(group: FiniteGroup, a: WreathElement):
    """Type of ``a``: for each cycle, its length and the class of its cycle-product."""
    from .wreath_types import WreathType

    parts: dict[int, list[int]] = {}
    for cyc in a.cycles():
        rep = group.class_rep(cycle_product(group, a, cyc))
        parts.setdefault(rep, []).append(len(cyc))
    return WreathType.from_parts(parts)

