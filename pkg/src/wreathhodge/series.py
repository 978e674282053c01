"""Exact bigraded Laurent polynomials and truncated power series.

Exponents of ``x`` and ``y`` are stored doubled so that half-integral
exponents (``y^{-d/2}`` for odd ``d``) stay integral.  Coefficients are
Python integers.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Iterator, Mapping, Union

__all__ = [
    "BigradedPoly",
    "SeriesQ",
    "Factor",
    "SeriesError",
    "poly_add",
    "poly_mul",
    "twist",
    "sym_series",
    "euler_product",
    "specialize",
    "format_exponent",
]


class SeriesError(ValueError):
    pass


def _halve(e2: int) -> Union[int, Fraction]:
    return e2 // 2 if e2 % 2 == 0 else Fraction(e2, 2)


def format_exponent(e2: int) -> str:
    """Render a doubled exponent as it appears in a printed monomial."""
    if e2 % 2 == 0:
        return str(e2 // 2)
    return "{%d/2}" % e2


class BigradedPoly:
    """Immutable Laurent polynomial in ``x`` and ``y`` with integer coefficients.

    Terms are keyed by doubled exponents ``(s2, t2)``.  Zero coefficients are
    never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean = {}
        if terms:
            for (s2, t2), c in terms.items():
                if c:
                    clean[(int(s2), int(t2))] = int(c)
        self._terms = clean
        self._hash = None

    # constructors

    @classmethod
    def zero(cls) -> BigradedPoly:
        return cls()

    @classmethod
    def one(cls) -> BigradedPoly:
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, s: Union[int, Fraction], t: Union[int, Fraction], coeff: int = 1) -> BigradedPoly:
        """``coeff * x^s y^t`` for integral or half-integral ``s``, ``t``."""
        return cls({(_double(s), _double(t)): coeff})

    @classmethod
    def from_table(cls, rows: Iterable[Iterable[int]]) -> BigradedPoly:
        """Build from ``[[s, t, h], ...]`` rows with integer exponents.

        Repeated ``(s, t)`` entries are summed.
        """
        acc: dict[tuple[int, int], int] = defaultdict(int)
        for row in rows:
            s, t, h = row
            acc[(2 * int(s), 2 * int(t))] += int(h)
        return cls(acc)

    # access

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        return iter(sorted(self._terms.items()))

    def coeff(self, s: Union[int, Fraction], t: Union[int, Fraction]) -> int:
        """Coefficient of ``x^s y^t`` (exponents given undoubled)."""
        return self._terms.get((_double(s), _double(t)), 0)

    def coeff2(self, s2: int, t2: int) -> int:
        return self._terms.get((s2, t2), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_even_graded(self) -> bool:
        """True when every exponent is an integer."""
        return all(s2 % 2 == 0 and t2 % 2 == 0 for s2, t2 in self._terms)

    def table(self) -> list[list[int]]:
        """``[[s, t, c], ...]`` rows; requires integral exponents."""
        if not self.is_even_graded():
            raise SeriesError("polynomial has half-integral exponents")
        return [[s2 // 2, t2 // 2, c] for (s2, t2), c in self.items()]

    def doubled_table(self) -> list[list[int]]:
        return [[s2, t2, c] for (s2, t2), c in self.items()]

    # arithmetic

    def __add__(self, other: BigradedPoly) -> BigradedPoly:
        if not isinstance(other, BigradedPoly):
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return BigradedPoly(acc)

    def __neg__(self) -> BigradedPoly:
        return BigradedPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: BigradedPoly) -> BigradedPoly:
        if not isinstance(other, BigradedPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union[BigradedPoly, int]) -> BigradedPoly:
        if isinstance(other, int):
            return BigradedPoly({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, BigradedPoly):
            return NotImplemented
        acc: dict[tuple[int, int], int] = defaultdict(int)
        for (a, b), c in self._terms.items():
            for (u, v), d in other._terms.items():
                acc[(a + u, b + v)] += c * d
        return BigradedPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> BigradedPoly:
        if k < 0:
            raise SeriesError("negative powers are not supported")
        out = BigradedPoly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift2(self, ds2: int, dt2: int) -> BigradedPoly:
        """Multiply by ``x^{ds2/2} y^{dt2/2}``."""
        return BigradedPoly({(s + ds2, t + dt2): c for (s, t), c in self._terms.items()})

    def map_terms(self, fn: Callable[[int, int, int], tuple[int, int, int]]) -> BigradedPoly:
        """Apply ``fn(s2, t2, c) -> (s2', t2', c')`` to every term, summing collisions."""
        acc: dict[tuple[int, int], int] = defaultdict(int)
        for (s2, t2), c in self._terms.items():
            a, b, d = fn(s2, t2, c)
            acc[(a, b)] += d
        return BigradedPoly(acc)

    def parity_signed(self) -> BigradedPoly:
        """Multiply each ``x^s y^t`` coefficient by ``(-1)^(s+t)``.

        Converts between Hodge polynomials and virtual (e-)polynomials; the
        operation is an involution.
        """
        def flip(s2: int, t2: int, c: int) -> tuple[int, int, int]:
            if (s2 + t2) % 2:
                raise SeriesError("total degree s+t is not an integer; parity undefined")
            return s2, t2, -c if ((s2 + t2) // 2) % 2 else c
        return self.map_terms(flip)

    def transpose(self) -> BigradedPoly:
        return BigradedPoly({(t, s): c for (s, t), c in self._terms.items()})

    def evaluate(self, x: int, y: int) -> int:
        """Substitute ``x, y`` in ``{1, -1}``."""
        if x not in (1, -1) or y not in (1, -1):
            raise SeriesError("only x, y in {1, -1} are supported")
        total = 0
        for (s2, t2), c in self._terms.items():
            sign = 1
            for val, e2 in ((x, s2), (y, t2)):
                if val == -1:
                    if e2 % 2:
                        raise SeriesError(
                            "cannot substitute -1 into a half-integral exponent %s"
                            % format_exponent(e2)
                        )
                    if (e2 // 2) % 2:
                        sign = -sign
            total += sign * c
        return total

    # comparison / hashing

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self == BigradedPoly({(0, 0): other})
        if not isinstance(other, BigradedPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return "BigradedPoly(%s)" % self

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        # descending total degree reads like the usual Hodge polynomial
        order = sorted(self._terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0][0], kv[0][1]))
        out = []
        for (s2, t2), c in order:
            mono = []
            for var, e2 in (("x", s2), ("y", t2)):
                if e2 == 0:
                    continue
                mono.append(var if e2 == 2 else "%s^%s" % (var, format_exponent(e2)))
            body = "*".join(mono)
            if not body:
                piece = str(abs(c))
            elif abs(c) == 1:
                piece = body
            else:
                piece = "%d*%s" % (abs(c), body)
            sign = "-" if c < 0 else "+"
            out.append((sign, piece))
        first_sign, first = out[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, piece in out[1:]:
            text += " %s %s" % (sign, piece)
        return text


def _double(v: Union[int, Fraction]) -> int:
    d = Fraction(v) * 2
    if d.denominator != 1:
        raise SeriesError("exponent %s is not a half-integer" % v)
    return int(d)


def poly_add(a: BigradedPoly, b: BigradedPoly) -> BigradedPoly:
    return a + b


def poly_mul(a: BigradedPoly, b: BigradedPoly) -> BigradedPoly:
    return a * b


def twist(a: BigradedPoly, n: Union[int, Fraction]) -> BigradedPoly:
    """Multiply by ``(xy)^n``; ``n`` may be a half-integer."""
    n2 = _double(n)
    return a.shift2(n2, n2)


Key = tuple[int, int]  # (q-degree, p-degree)


class SeriesQ:
    """Power series in ``q`` (and optionally ``p``) truncated to a box.

    Coefficients are :class:`BigradedPoly`.  Terms with ``q > qmax`` or
    ``p > pmax`` are dropped on construction and by every operation.
    """

    def __init__(self, qmax: int, pmax: int = 0, coeffs: Mapping[Key, BigradedPoly] | None = None):
        if qmax < 0 or pmax < 0:
            raise SeriesError("truncation degrees must be nonnegative")
        self.qmax = qmax
        self.pmax = pmax
        self._c: dict[Key, BigradedPoly] = {}
        if coeffs:
            for (q, p), poly in coeffs.items():
                if q < 0 or p < 0:
                    raise SeriesError("negative series degree (%d, %d)" % (q, p))
                if q <= qmax and p <= pmax and poly:
                    self._c[(q, p)] = poly

    @classmethod
    def one(cls, qmax: int, pmax: int = 0) -> SeriesQ:
        return cls(qmax, pmax, {(0, 0): BigradedPoly.one()})

    def __getitem__(self, key: Union[int, Key]) -> BigradedPoly:
        if isinstance(key, int):
            key = (key, 0)
        return self._c.get(key, BigradedPoly())

    def coeff(self, q: int, p: int = 0) -> BigradedPoly:
        return self[(q, p)]

    def keys(self) -> list[Key]:
        return sorted(self._c)

    def items(self) -> list[tuple[Key, BigradedPoly]]:
        return [(k, self._c[k]) for k in sorted(self._c)]

    def degrees(self) -> Iterator[Key]:
        """Every ``(q, p)`` in the truncation box, in order."""
        for q in range(self.qmax + 1):
            for p in range(self.pmax + 1):
                yield (q, p)

    def truncate(self, qmax: int, pmax: int | None = None) -> SeriesQ:
        pmax = self.pmax if pmax is None else pmax
        return SeriesQ(min(qmax, self.qmax), min(pmax, self.pmax), self._c)

    def __add__(self, other: SeriesQ) -> SeriesQ:
        qmax, pmax = min(self.qmax, other.qmax), min(self.pmax, other.pmax)
        acc = dict(self._c)
        for k, v in other._c.items():
            acc[k] = acc.get(k, BigradedPoly()) + v
        return SeriesQ(qmax, pmax, acc)

    def __mul__(self, other: SeriesQ) -> SeriesQ:
        qmax, pmax = min(self.qmax, other.qmax), min(self.pmax, other.pmax)
        acc: dict[Key, BigradedPoly] = {}
        for (q1, p1), a in self._c.items():
            for (q2, p2), b in other._c.items():
                q, p = q1 + q2, p1 + p2
                if q > qmax or p > pmax:
                    continue
                acc[(q, p)] = acc.get((q, p), BigradedPoly()) + a * b
        return SeriesQ(qmax, pmax, acc)

    def map_coeffs(self, fn: Callable[[Key, BigradedPoly], BigradedPoly]) -> SeriesQ:
        return SeriesQ(self.qmax, self.pmax, {k: fn(k, v) for k, v in self._c.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SeriesQ):
            return NotImplemented
        return (self.qmax, self.pmax, self._c) == (other.qmax, other.pmax, other._c)

    def __repr__(self) -> str:
        body = ", ".join("q^%d p^%d: %s" % (q, p, c) for (q, p), c in self.items())
        return "SeriesQ(qmax=%d, pmax=%d, {%s})" % (self.qmax, self.pmax, body)

    def to_json(self) -> list[dict]:
        out = []
        for (q, p), poly in self.items():
            entry: dict = {"q": q}
            if self.pmax:
                entry["p"] = p
            entry["terms"] = poly.doubled_table()
            out.append(entry)
        return out

    @classmethod
    def from_json(cls, data: list[dict], qmax: int, pmax: int = 0) -> SeriesQ:
        coeffs = {}
        for entry in data:
            key = (int(entry["q"]), int(entry.get("p", 0)))
            coeffs[key] = BigradedPoly({(s2, t2): c for s2, t2, c in entry["terms"]})
        return cls(qmax, pmax, coeffs)


@dataclass(frozen=True)
class Factor:
    """One factor ``(1 - q^qdeg p^pdeg x^{s2/2} y^{t2/2})^(-exponent)``."""

    qdeg: int
    pdeg: int
    s2: int
    t2: int
    exponent: int


FactorSource = Union[Iterable[Factor], Callable[[int, int], Iterable[Factor]]]


def _binomial_coeffs(e: int, kmax: int) -> list[int]:
    """Coefficients of ``(1 - z)^(-e)`` up to ``z^kmax``."""
    if e >= 0:
        return [comb(e + k - 1, k) if e else int(k == 0) for k in range(kmax + 1)]
    m = -e
    return [(-1) ** k * comb(m, k) for k in range(kmax + 1)]


def euler_product(factors: FactorSource, qmax: int, pmax: int = 0) -> SeriesQ:
    """Expand ``prod (1 - M)^(-e)`` exactly inside the truncation box.

    ``factors`` is either an iterable of :class:`Factor` or a callback
    ``(qdeg, pdeg) -> iterable of Factor`` queried once for every degree in
    the box except ``(0, 0)``; the callback form lets infinite products be
    consumed lazily.  Factors of degree ``(0, 0)`` diverge and are rejected;
    factors outside the box are ignored.
    """
    if callable(factors):
        source = factors

        def stream() -> Iterator[Factor]:
            for q in range(qmax + 1):
                for p in range(pmax + 1):
                    if (q, p) != (0, 0):
                        yield from source(q, p)

        items: Iterable[Factor] = stream()
    else:
        items = factors

    grouped: dict[tuple[int, int, int, int], int] = defaultdict(int)
    for f in items:
        if f.qdeg < 0 or f.pdeg < 0:
            raise SeriesError("factor has a negative series degree")
        if f.qdeg == 0 and f.pdeg == 0:
            raise SeriesError(
                "factor x^{%s} y^{%s} has zero q- and p-degree; the product diverges"
                % (format_exponent(f.s2), format_exponent(f.t2))
            )
        if f.qdeg > qmax or f.pdeg > pmax:
            continue
        grouped[(f.qdeg, f.pdeg, f.s2, f.t2)] += f.exponent

    result: dict[Key, BigradedPoly] = {(0, 0): BigradedPoly.one()}
    for (a, b, s2, t2), e in sorted(grouped.items()):
        if e == 0:
            continue
        kmax = min(qmax // a if a else pmax // b, pmax // b if b else qmax // a)
        coeffs = _binomial_coeffs(e, kmax)
        powers = [BigradedPoly({(k * s2, k * t2): coeffs[k]}) for k in range(kmax + 1)]
        new: dict[Key, BigradedPoly] = {}
        for (q, p), poly in result.items():
            for k in range(kmax + 1):
                qq, pp = q + k * a, p + k * b
                if qq > qmax or pp > pmax:
                    break
                if not coeffs[k]:
                    continue
                term = poly * powers[k]
                new[(qq, pp)] = new[(qq, pp)] + term if (qq, pp) in new else term
        result = {k: v for k, v in new.items() if v}
    return SeriesQ(qmax, pmax, result)


def sym_series(v: BigradedPoly, qmax: int) -> SeriesQ:
    """Generating series of the graded symmetric powers of ``v``.

    ``v`` is a virtual (e-)polynomial: a negative coefficient stands for
    odd classes, which enter as exterior (polynomial) factors.
    """
    return euler_product(
        (Factor(1, 0, s2, t2, e) for (s2, t2), e in v.items()), qmax
    )


def specialize(series: SeriesQ, x: int, y: int) -> dict[Key, int]:
    """Substitute ``x, y`` in ``{1, -1}`` in every coefficient.

    Returns a dense ``{(q, p): int}`` map over the whole truncation box.
    """
    return {k: series[k].evaluate(x, y) for k in series.degrees()}
