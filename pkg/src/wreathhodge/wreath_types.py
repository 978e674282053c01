"""Conjugacy types of ``G wr S_n`` as partition-valued functions on classes of G.

A type assigns to each conjugacy class ``c`` of ``G`` a partition; ``m_r(c)``
counts the r-cycles of the permutation part whose cycle-product lies in
``c``.  Classes are keyed by any sortable label; for a :class:`FiniteGroup`
the label is the class representative.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Hashable, Iterator, Mapping, Sequence

from .groups import FiniteGroup

__all__ = [
    "WreathType",
    "integer_partitions",
    "partition_valued_functions",
    "enumerate_types",
    "count_types",
    "centralizer_order",
    "class_size",
]


@dataclass(frozen=True, order=True)
class WreathType:
    """``parts`` holds ``(class label, partition)`` pairs sorted by label.

    Partitions are tuples in descending order; classes with the empty
    partition are omitted.
    """

    parts: tuple[tuple[Hashable, tuple[int, ...]], ...]

    @classmethod
    def from_parts(cls, parts: Mapping[Hashable, Sequence[int]]) -> WreathType:
        clean = []
        for label in sorted(parts):
            p = tuple(sorted((int(r) for r in parts[label]), reverse=True))
            if any(r < 1 for r in p):
                raise ValueError("part sizes must be positive")
            if p:
                clean.append((label, p))
        return cls(tuple(clean))

    @classmethod
    def from_multiplicities(cls, entries: Mapping[tuple[Hashable, int], int]) -> WreathType:
        parts: dict[Hashable, list[int]] = {}
        for (label, r), m in entries.items():
            if m < 0:
                raise ValueError("multiplicities must be nonnegative")
            parts.setdefault(label, []).extend([r] * m)
        return cls.from_parts(parts)

    @property
    def n(self) -> int:
        return sum(sum(p) for _, p in self.parts)

    @property
    def entries(self) -> dict[tuple[Hashable, int], int]:
        """``{(c, r): m_r(c)}`` with zero multiplicities omitted."""
        out: dict[tuple[Hashable, int], int] = {}
        for label, p in self.parts:
            for r in p:
                out[(label, r)] = out.get((label, r), 0) + 1
        return out

    def partition(self, label: Hashable) -> tuple[int, ...]:
        for lab, p in self.parts:
            if lab == label:
                return p
        return ()

    def __str__(self) -> str:
        if not self.parts:
            return "[]"
        return "".join(
            "[c%s:(%s)]" % (label, ",".join(str(r) for r in p)) for label, p in self.parts
        )

    def to_json(self) -> list[dict]:
        return [{"class": label, "parts": list(p)} for label, p in self.parts]


def integer_partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` in reverse-lexicographic order, ``(n)`` first."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in integer_partitions(n - first, first):
            yield (first,) + rest


def _weak_compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    # first share descending, so the all-on-first composition comes first
    if k == 0:
        if n == 0:
            yield ()
        return
    if k == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _weak_compositions(n - first, k - 1):
            yield (first,) + rest


def partition_valued_functions(labels: Sequence[Hashable], n: int) -> Iterator[WreathType]:
    """All partition-valued functions on ``labels`` of total size ``n``."""
    labels = sorted(labels)
    for shares in _weak_compositions(n, len(labels)):
        yield from _assign(labels, shares, 0, [])


def _assign(labels, shares, i, acc) -> Iterator[WreathType]:
    if i == len(labels):
        yield WreathType(tuple((lab, p) for lab, p in acc if p))
        return
    for p in integer_partitions(shares[i]):
        acc.append((labels[i], p))
        yield from _assign(labels, shares, i + 1, acc)
        acc.pop()


def _labels(group: FiniteGroup) -> list[int]:
    return [c.representative for c in group.classes]


def enumerate_types(group: FiniteGroup, n: int) -> list[WreathType]:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(partition_valued_functions(_labels(group), n))


def count_types(group: FiniteGroup, n: int) -> int:
    return sum(1 for _ in partition_valued_functions(_labels(group), n))


def centralizer_order(group: FiniteGroup, t: WreathType) -> int:
    """Order of the centralizer of any element of type ``t``.

    Equals ``prod_{c,r} (r |Z_G(c)|)^{m_r(c)} m_r(c)!``.
    """
    zorder = {c.representative: c.centralizer_order for c in group.classes}
    out = 1
    for (label, r), m in t.entries.items():
        out *= (r * zorder[label]) ** m * factorial(m)
    return out


def class_size(group: FiniteGroup, t: WreathType) -> int:
    total = group.order ** t.n * factorial(t.n)
    z = centralizer_order(group, t)
    q, rem = divmod(total, z)
    if rem:
        raise AssertionError(
            "centralizer order %d does not divide group order %d for type %s" % (z, total, t)
        )
    return q
