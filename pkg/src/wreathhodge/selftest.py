"""Oracle suites run by ``wreathhodge selftest``."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable

from .elliptic import verify_q0_consistency
from .fixtures import orbifold_fixtures, surface_fixtures
from .groups import build_wreath, cyclic_group, symmetric_group
from .hilbert import goettsche_series
from .orbifold import random_orbifold, trivial_orbifold, wreath_series_direct, wreath_series_product
from .report import compare_series
from .wreath_types import centralizer_order, count_types

RANDOM_SEED = 20010
RANDOM_FIXTURES = 20


@dataclass
class SuiteResult:
    name: str
    ok: bool
    seconds: float
    checks: int
    counterexample: dict | None = None


def _groups_suite() -> tuple[int, dict | None]:
    checks = 0
    for group, nmax in ((cyclic_group(2), 4), (cyclic_group(3), 3), (symmetric_group(3), 2)):
        for n in range(1, nmax + 1):
            w = build_wreath(group, n)
            classes = w.classes
            types = [w.type_of(c.representative) for c in classes]
            checks += 1
            if len(set(types)) != len(classes) or len(classes) != count_types(group, n):
                return checks, {"group": group.name, "n": n, "brute_classes": len(classes),
                                "distinct_types": len(set(types)), "count_types": count_types(group, n)}
            for cls, t in zip(classes, types):
                checks += 1
                for m in cls.members:
                    if w.type_of(m) != t:
                        return checks, {"group": group.name, "n": n, "element": m,
                                        "type": str(w.type_of(m)), "class_type": str(t)}
                brute = len(w.centralizer(cls.representative))
                if brute != centralizer_order(group, t):
                    return checks, {"group": group.name, "n": n, "type": str(t),
                                    "brute_centralizer": brute, "formula": centralizer_order(group, t)}
    return checks, None


def _dual_path_suite() -> tuple[int, dict | None]:
    checks = 0
    cases = [(name, orb, 4) for name, orb in orbifold_fixtures().items()]
    rng = random.Random(RANDOM_SEED)
    cases += [("random-%d" % i, random_orbifold(rng), 3) for i in range(RANDOM_FIXTURES)]
    for name, orb, qmax in cases:
        checks += 1
        rep = compare_series(name, wreath_series_product(orb, qmax), wreath_series_direct(orb, qmax))
        if not rep.passed:
            bad = rep.first_failure
            return checks, {"fixture": name, "orbifold": orb.to_json(), "q": bad.q,
                            "mismatch": bad.mismatch.describe()}
    return checks, None


def _goettsche_suite() -> tuple[int, dict | None]:
    checks = 0
    for name, surf in surface_fixtures().items():
        checks += 1
        orb = trivial_orbifold(surf.hodge, 2, name)
        rep = compare_series(name, goettsche_series(surf, 5), wreath_series_product(orb, 5))
        if not rep.passed:
            bad = rep.first_failure
            return checks, {"surface": surf.to_json(), "q": bad.q, "mismatch": bad.mismatch.describe()}
    return checks, None


def _elliptic_suite() -> tuple[int, dict | None]:
    checks = 0
    for name, orb in orbifold_fixtures().items():
        if orb.dim != 2:
            continue
        checks += 1
        rep = verify_q0_consistency(orb, 4)
        if not rep.passed:
            bad = rep.first_failure
            return checks, {"fixture": name, "p": bad.p, "mismatch": bad.mismatch.describe()}
    return checks, None


SUITES: list[tuple[str, Callable[[], tuple[int, dict | None]]]] = [
    ("wreath conjugacy classes vs types", _groups_suite),
    ("closed product vs direct type sum", _dual_path_suite),
    ("Goettsche vs trivial-group wreath series", _goettsche_suite),
    ("q=0 elliptic genus consistency", _elliptic_suite),
]


def run_selftest() -> list[SuiteResult]:
    results = []
    for name, fn in SUITES:
        start = time.perf_counter()
        checks, bad = fn()
        results.append(SuiteResult(name, bad is None, time.perf_counter() - start, checks, bad))
    return results
