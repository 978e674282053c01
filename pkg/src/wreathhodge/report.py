"""Coefficient-wise comparison reports."""

from __future__ import annotations

from dataclasses import dataclass, field

from .series import BigradedPoly, SeriesQ, format_exponent


@dataclass
class Mismatch:
    s2: int
    t2: int
    left: int
    right: int

    def describe(self, xname: str = "x", yname: str = "y") -> str:
        return "x^%s y^%s: %d != %d" % (format_exponent(self.s2), format_exponent(self.t2), self.left, self.right)


@dataclass
class DegreeResult:
    q: int
    p: int
    ok: bool
    mismatch: Mismatch | None = None


@dataclass
class Report:
    title: str
    hypothesis_ok: bool = True
    hypothesis_note: str = ""
    degrees: list[DegreeResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.hypothesis_ok and all(d.ok for d in self.degrees)

    @property
    def first_failure(self) -> DegreeResult | None:
        return next((d for d in self.degrees if not d.ok), None)

    def lines(self) -> list[str]:
        out = [self.title]
        if not self.hypothesis_ok:
            out.append("hypothesis violated: %s" % self.hypothesis_note)
            return out
        for d in self.degrees:
            deg = "q^%d" % d.q if not d.p else "q^%d p^%d" % (d.q, d.p)
            if d.ok:
                out.append("  %s: ok" % deg)
            else:
                out.append("  %s: MISMATCH at %s" % (deg, d.mismatch.describe()))
        out.append("PASS" if self.passed else "FAIL")
        return out

    def to_json(self) -> dict:
        return {
            "title": self.title,
            "passed": self.passed,
            "hypothesis_ok": self.hypothesis_ok,
            "hypothesis_note": self.hypothesis_note,
            "degrees": [
                {
                    "q": d.q,
                    "p": d.p,
                    "ok": d.ok,
                    "mismatch": None
                    if d.mismatch is None
                    else {"s2": d.mismatch.s2, "t2": d.mismatch.t2, "left": d.mismatch.left, "right": d.mismatch.right},
                }
                for d in self.degrees
            ],
        }


def first_difference(a: BigradedPoly, b: BigradedPoly) -> Mismatch | None:
    keys = sorted(set(a.terms) | set(b.terms))
    for s2, t2 in keys:
        if a.coeff2(s2, t2) != b.coeff2(s2, t2):
            return Mismatch(s2, t2, a.coeff2(s2, t2), b.coeff2(s2, t2))
    return None


def compare_series(title: str, a: SeriesQ, b: SeriesQ) -> Report:
    rep = Report(title)
    qmax, pmax = min(a.qmax, b.qmax), min(a.pmax, b.pmax)
    for q in range(qmax + 1):
        for p in range(pmax + 1):
            mm = first_difference(a[(q, p)], b[(q, p)])
            rep.degrees.append(DegreeResult(q, p, mm is None, mm))
    return rep
