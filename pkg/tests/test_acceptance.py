"""Acceptance criteria, one test per criterion.

Each test records a ``criterion N: PASS`` or ``FAIL`` line that is printed
in the terminal summary. All comparisons are exact integer equality.
"""

import random
import time
from contextlib import contextmanager

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from wreathhodge.elliptic import verify_q0_consistency
from wreathhodge.fixtures import (
    ale,
    cp2_z3,
    cp2_z3_resolution,
    k3_surface,
    kummer,
    orbifold_fixtures,
    symmetric_k3,
)
from wreathhodge.groups import build_wreath, cyclic_group, symmetric_group
from wreathhodge.hilbert import goettsche_series, verify_samehodge
from wreathhodge.orbifold import (
    graded_sym_power,
    orbifold_e_poly,
    orbifold_hodge_poly,
    random_orbifold,
    wreath_series_direct,
    wreath_series_product,
)
from wreathhodge.series import BigradedPoly, specialize, sym_series
from wreathhodge.wreath_types import centralizer_order, enumerate_types

from oracles import brute_conjugacy_classes, brute_sym_power, eta_power_coeffs


@contextmanager
def criterion(log, number, title, budget):
    start = time.perf_counter()
    status = "FAIL"
    try:
        yield
        elapsed = time.perf_counter() - start
        assert elapsed < budget, "took %.1fs, budget %ds" % (elapsed, budget)
        status = "PASS"
    finally:
        line = "criterion %d: %s  %s (%.2fs)" % (number, status, title, time.perf_counter() - start)
        log.append(line)
        print(line)


def test_criterion_1_wreath_conjugacy(acceptance_log):
    cases = [(cyclic_group(2), n) for n in range(1, 5)]
    cases += [(cyclic_group(3), n) for n in range(1, 4)]
    cases += [(symmetric_group(3), n) for n in (1, 2)]
    with criterion(acceptance_log, 1, "wreath conjugacy classes match types", 10):
        for group, n in cases:
            w = build_wreath(group, n)
            orbits = brute_conjugacy_classes(range(w.order), w.multiply, w.inverse)
            types = enumerate_types(group, n)
            assert len(orbits) == len(types), (group.name, n)
            seen = set()
            for orbit in orbits:
                rep = min(orbit)
                t = w.type_of(rep)
                seen.add(t)
                commuting = sum(1 for b in range(w.order) if w.multiply(rep, b) == w.multiply(b, rep))
                assert commuting == centralizer_order(group, t), (group.name, n, str(t))
                assert len(orbit) * commuting == w.order
            assert seen == set(types)


def test_criterion_2_dual_path(acceptance_log):
    named = [kummer(), cp2_z3(), ale(2), ale(3), ale(5)]
    rng = random.Random(20010)
    randoms = [random_orbifold(rng, dim=d) for d in (2, 4) for _ in range(10)]
    with criterion(acceptance_log, 2, "product series equals direct type sum", 30):
        for orb in named:
            assert wreath_series_product(orb, 4) == wreath_series_direct(orb, 4), orb.name
        for orb in randoms:
            assert wreath_series_product(orb, 3) == wreath_series_direct(orb, 3), orb.to_json()


def test_criterion_3_tables(acceptance_log):
    with criterion(acceptance_log, 3, "orbifold Hodge tables", 1):
        assert orbifold_hodge_poly(kummer()).table() == [
            [0, 0, 1], [0, 2, 1], [1, 1, 20], [2, 0, 1], [2, 2, 1]
        ]
        assert orbifold_hodge_poly(cp2_z3()).table() == [[0, 0, 1], [1, 1, 7], [2, 2, 1]]
        for k in (2, 3, 5):
            assert orbifold_hodge_poly(ale(k)).coeff(1, 1) == k - 1


def test_criterion_4_samehodge(acceptance_log):
    with criterion(acceptance_log, 4, "resolution Hodge numbers agree to q^4", 10):
        assert verify_samehodge(kummer(), k3_surface(), 4).passed
        assert verify_samehodge(cp2_z3(), cp2_z3_resolution(), 4).passed
        goettsche = goettsche_series(k3_surface(), 2)[2]
        direct = wreath_series_direct(kummer(), 2)[2]
        for poly in (goettsche, direct):
            assert poly.coeff(1, 1) == 21
            assert poly.evaluate(1, 1) == 324


def test_criterion_5_trivial_group(acceptance_log):
    with criterion(acceptance_log, 5, "trivial group gives the Hilbert scheme series", 2):
        assert wreath_series_product(symmetric_k3(), 5) == goettsche_series(k3_surface(), 5)


def test_criterion_6_euler(acceptance_log):
    with criterion(acceptance_log, 6, "Euler specialization", 5):
        for name, orb in orbifold_fixtures().items():
            e = orbifold_e_poly(orb).evaluate(1, 1)
            vals = specialize(wreath_series_product(orb, 5), 1, 1)
            assert [vals[(n, 0)] for n in range(6)] == eta_power_coeffs(e, 5), name


def test_criterion_7_q0(acceptance_log):
    with criterion(acceptance_log, 7, "q=0 elliptic genus consistency to p^4", 5):
        for name, orb in orbifold_fixtures().items():
            assert orb.dim == 2
            assert verify_q0_consistency(orb, 4).passed, name


def virtual_polys(max_dim):
    # e-polynomials whose total basis size |coeffs| stays within max_dim
    key = st.tuples(st.integers(0, 4), st.integers(0, 4))
    return st.dictionaries(key, st.integers(-4, 6), max_size=6).filter(
        lambda d: sum(abs(c) for c in d.values()) <= max_dim
    ).map(BigradedPoly)


def even_tables():
    key = st.tuples(st.integers(0, 2), st.integers(0, 2)).filter(lambda k: (k[0] + k[1]) % 2 == 0)
    return st.dictionaries(key, st.integers(0, 4), max_size=6).map(
        lambda d: BigradedPoly({(2 * s, 2 * t): c for (s, t), c in d.items()})
    )


PROPERTY_SETTINGS = settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@PROPERTY_SETTINGS
@given(st.integers(0, 10**6))
def _symmetry(seed):
    orb = random_orbifold(random.Random(seed))
    for _, poly in wreath_series_product(orb, 3).items():
        assert poly == poly.transpose()


@PROPERTY_SETTINGS
@given(st.integers(0, 10**6), even_tables())
def _nonnegativity(seed, extra):
    orb = random_orbifold(random.Random(seed), even_only=True)
    for _, poly in wreath_series_product(orb, 3).items():
        assert all(c >= 0 for c in poly.terms.values())
    for _, poly in sym_series(extra, 4).items():
        assert all(c >= 0 for c in poly.terms.values())


@PROPERTY_SETTINGS
@given(virtual_polys(30), virtual_polys(30))
def _multiplicativity(a, b):
    assert sym_series(a + b, 4) == sym_series(a, 4) * sym_series(b, 4)


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(virtual_polys(30), st.integers(1, 4))
def _brute_sym_power(v, n):
    expected = brute_sym_power(v.terms, n)
    assert sym_series(v, n)[n].terms == expected
    assert graded_sym_power(v, n).terms == expected


def test_criterion_8_properties(acceptance_log):
    # a fixed case at the dimension limit, then the randomized suites
    full = BigradedPoly({(0, 0): 6, (2, 0): -8, (0, 2): -8, (2, 2): 8})
    with criterion(acceptance_log, 8, "property suites", 30):
        assert sym_series(full, 4)[4].terms == brute_sym_power(full.terms, 4)
        _symmetry()
        _nonnegativity()
        _multiplicativity()
        _brute_sym_power()
