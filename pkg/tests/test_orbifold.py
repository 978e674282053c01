import random
from fractions import Fraction

import pytest

from wreathhodge import orbifold as orbmod
from wreathhodge.fixtures import K3, ale, cp2_z3, kummer, orbifold_fixtures, symmetric_k3
from wreathhodge.groups import cyclic_group, symmetric_group
from wreathhodge.hilbert import goettsche_series
from wreathhodge.fixtures import k3_surface
from wreathhodge.orbifold import (
    InputError,
    OrbifoldData,
    Sector,
    SectorComponent,
    graded_sym_power,
    orbifold_hodge_poly,
    random_orbifold,
    shift_from_weights,
    symmetric_quotient_series,
    wreath_series_direct,
    wreath_series_product,
    wreath_shift,
)
from wreathhodge.series import BigradedPoly, specialize

from oracles import brute_sym_power, eta_power_coeffs

ONE = BigradedPoly.one()


def test_shift_from_weights():
    assert shift_from_weights([0, 0]) == 0
    assert shift_from_weights([Fraction(1, 3), Fraction(2, 3)]) == 1
    assert shift_from_weights(["1/2", "1/2"]) == 1
    with pytest.raises(InputError):
        shift_from_weights([1, 0])


def test_wreath_shift():
    assert wreath_shift(0, 1, 2) == 0
    assert wreath_shift(1, 2, 2) == 2
    assert wreath_shift(1, 3, 4) == 5


def test_kummer_table():
    h = orbifold_hodge_poly(kummer())
    assert h.table() == [[0, 0, 1], [0, 2, 1], [1, 1, 20], [2, 0, 1], [2, 2, 1]]


def test_cp2_z3_table():
    h = orbifold_hodge_poly(cp2_z3())
    assert h.table() == [[0, 0, 1], [1, 1, 7], [2, 2, 1]]


@pytest.mark.parametrize("k", [1, 2, 3, 5, 9])
def test_ale_h11(k):
    assert orbifold_hodge_poly(ale(k)).coeff(1, 1) == k - 1


def test_validation():
    pt = BigradedPoly.one()
    with pytest.raises(InputError, match="even"):
        OrbifoldData(3, (Sector("e", (SectorComponent(pt),), True),))
    with pytest.raises(InputError, match="identity"):
        OrbifoldData(2, (Sector("e", (SectorComponent(pt),)),))
    with pytest.raises(InputError, match="nonzero shift"):
        OrbifoldData(2, (Sector("e", (SectorComponent(pt, 1),), True),))
    with pytest.raises(InputError, match="fractional"):
        SectorComponent(pt, "1/2")
    with pytest.raises(InputError, match="fractional"):
        SectorComponent(pt, 0.5)
    with pytest.raises(InputError, match="negative Hodge"):
        SectorComponent(BigradedPoly({(0, 0): -1}))
    with pytest.raises(InputError, match="exceeds dimension"):
        OrbifoldData(2, (Sector("e", (SectorComponent(BigradedPoly.monomial(3, 0)),), True),))
    asym = BigradedPoly.from_table([[0, 0, 1], [1, 0, 1]])
    with pytest.raises(InputError, match="symmetry"):
        OrbifoldData(2, (Sector("e", (SectorComponent(asym),), True),), compact=True)
    OrbifoldData(2, (Sector("e", (SectorComponent(asym),), True),))


def test_identity_sector_ordered_first():
    pt = BigradedPoly.one()
    o = OrbifoldData(2, (Sector("g", (SectorComponent(pt, 1),)), Sector("e", (SectorComponent(pt),), True)))
    assert o.class_labels == ["e", "g"]


def test_json_round_trip():
    for orb in orbifold_fixtures().values():
        assert OrbifoldData.from_json(orb.to_json()) == orb


def test_symmetric_quotient_series():
    k = kummer()
    s = symmetric_quotient_series(k, 3)
    quotient = k.untwisted.components[0].hodge
    assert s[0] == ONE
    assert s[1] == quotient
    assert s[2].terms == brute_sym_power(quotient.terms, 2)


@pytest.mark.parametrize("m", range(0, 5))
def test_graded_sym_power_matches_brute_force(m):
    v = BigradedPoly.from_table([[0, 0, 1], [1, 0, 2], [0, 1, 2], [1, 1, 3]]).parity_signed()
    expected = brute_sym_power(v.terms, m) if m else {(0, 0): 1}
    assert graded_sym_power(v, m).terms == expected


def test_product_low_orders():
    for orb in orbifold_fixtures().values():
        s = wreath_series_product(orb, 2)
        assert s[0] == ONE
        assert s[1] == orbifold_hodge_poly(orb).parity_signed()


def test_kummer_second_coefficient():
    s = wreath_series_product(kummer(), 2)
    assert s[2].coeff(1, 1) == 21
    assert specialize(s, 1, 1)[(2, 0)] == 324


def test_kummer_direct_over_z2_types():
    z2 = cyclic_group(2)
    direct = wreath_series_direct(kummer(), 2, group=z2)
    assert direct == wreath_series_product(kummer(), 2)


def test_direct_rejects_wrong_group():
    with pytest.raises(InputError, match="conjugacy classes"):
        wreath_series_direct(kummer(), 2, group=symmetric_group(3))


def test_trivial_group_direct_equals_goettsche():
    assert wreath_series_direct(symmetric_k3(), 5) == goettsche_series(k3_surface(), 5)


def test_euler_specialization_k3():
    vals = specialize(wreath_series_product(symmetric_k3(), 5), 1, 1)
    assert [vals[(n, 0)] for n in range(6)] == eta_power_coeffs(24, 5)


@pytest.mark.parametrize("seed", range(8))
def test_random_dual_path(seed):
    orb = random_orbifold(random.Random(seed))
    assert wreath_series_product(orb, 3) == wreath_series_direct(orb, 3)


@pytest.mark.parametrize("seed", range(6))
def test_hodge_symmetry_preserved(seed):
    orb = random_orbifold(random.Random(100 + seed))
    for series in (wreath_series_product(orb, 3), wreath_series_direct(orb, 3)):
        for _, poly in series.items():
            assert poly == poly.transpose()


def test_mutated_shift_is_caught_at_q2(monkeypatch):
    def off_by_one(shift, r, d):
        return shift + (r - 1) * d // 2 + (1 if r > 1 else 0)

    monkeypatch.setattr(orbmod, "wreath_shift", off_by_one)
    orb = kummer()
    prod, direct = wreath_series_product(orb, 3), wreath_series_direct(orb, 3)
    assert prod[1] == direct[1]
    assert prod[2] != direct[2]
