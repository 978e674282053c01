"""Independent brute-force oracles used to compute and check expected values.

Nothing here calls the library's expansion routines.
"""

from __future__ import annotations

import itertools
from collections import Counter


def brute_sym_power(epoly: dict[tuple[int, int], int], n: int) -> dict[tuple[int, int], int]:
    """e-polynomial of S^n(V) by listing a basis of S^n.

    ``epoly`` maps doubled bidegrees to e-coefficients; ``|e|`` basis vectors
    sit in each bidegree, odd when ``e < 0``.  A basis of S^n is a multiset of
    n basis vectors in which no odd vector repeats; its sign is ``(-1)^#odd``.
    """
    basis = []
    for (s2, t2), e in sorted(epoly.items()):
        basis += [(s2, t2, e < 0)] * abs(e)
    out: Counter = Counter()
    for combo in itertools.combinations_with_replacement(range(len(basis)), n):
        counts = Counter(combo)
        if any(basis[i][2] and c > 1 for i, c in counts.items()):
            continue
        s2 = sum(basis[i][0] for i in combo)
        t2 = sum(basis[i][1] for i in combo)
        sign = -1 if sum(basis[i][2] for i in combo) % 2 else 1
        out[(s2, t2)] += sign
    return {k: v for k, v in out.items() if v}


def brute_poly_mul(a: dict, b: dict) -> dict:
    out: Counter = Counter()
    for (s, t), c in a.items():
        for (u, v), d in b.items():
            out[(s + u, t + v)] += c * d
    return {k: v for k, v in out.items() if v}


def eta_power_coeffs(e: int, nmax: int) -> list[int]:
    """Coefficients of prod_{r>=1} (1 - q^r)^(-e) by repeated geometric-series multiplication."""
    series = [1] + [0] * nmax
    for r in range(1, nmax + 1):
        for _ in range(abs(e)):
            if e > 0:
                # multiply by 1/(1 - q^r)
                for k in range(r, nmax + 1):
                    series[k] += series[k - r]
            else:
                # multiply by (1 - q^r)
                for k in range(nmax, r - 1, -1):
                    series[k] -= series[k - r]
    return series


def binomial_by_multiplication(e: int, kmax: int) -> list[int]:
    """Coefficients of (1 - z)^(-e), e > 0, by multiplying geometric series e times."""
    series = [1] + [0] * kmax
    for _ in range(e):
        for k in range(1, kmax + 1):
            series[k] += series[k - 1]
    return series


def brute_conjugacy_classes(elements, mul, inv) -> list[frozenset]:
    """Orbits under conjugation by every element."""
    seen = set()
    out = []
    for x in elements:
        if x in seen:
            continue
        orbit = frozenset(mul(mul(g, x), inv(g)) for g in elements)
        seen |= orbit
        out.append(orbit)
    return out
