import random

import pytest

from wreathhodge.fixtures import (
    K3,
    cp2_z3,
    cp2_z3_resolution,
    k3_surface,
    kummer,
    surface_fixtures,
    symmetric_k3,
)
from wreathhodge.hilbert import SurfaceHodge, goettsche_series, read_surface_file, verify_cor1, verify_samehodge
from wreathhodge.orbifold import (
    InputError,
    OrbifoldData,
    Sector,
    SectorComponent,
    orbifold_hodge_poly,
    random_orbifold,
    trivial_orbifold,
    wreath_series_product,
)
from wreathhodge.series import BigradedPoly, specialize

from oracles import eta_power_coeffs


def test_first_coefficient_is_the_surface():
    assert goettsche_series(k3_surface(), 1)[1] == K3


def test_k3_hilbert_square():
    s = goettsche_series(k3_surface(), 3)
    assert s[2].coeff(1, 1) == 21
    assert s[2].coeff(2, 2) == 232


def test_k3_euler_numbers():
    vals = specialize(goettsche_series(k3_surface(), 3), 1, 1)
    expected = eta_power_coeffs(24, 3)
    assert expected[3] == 3200
    assert [vals[(n, 0)] for n in range(4)] == expected


def test_goettsche_equals_trivial_wreath():
    for surf in surface_fixtures().values():
        orb = trivial_orbifold(surf.hodge, 2)
        assert goettsche_series(surf, 4) == wreath_series_product(orb, 4)


def test_samehodge_kummer():
    rep = verify_samehodge(kummer(), k3_surface(), 4)
    assert rep.passed and len(rep.degrees) == 5


def test_samehodge_cp2_z3():
    assert verify_samehodge(cp2_z3(), cp2_z3_resolution(), 4).passed


def test_samehodge_hypothesis_violation():
    bumped = SurfaceHodge(K3 + BigradedPoly.monomial(1, 1), name="K3+1")
    rep = verify_samehodge(kummer(), bumped, 4)
    assert not rep.passed
    assert not rep.hypothesis_ok
    assert "q^1" in rep.hypothesis_note
    assert rep.degrees == []


def test_samehodge_requires_surface():
    four = trivial_orbifold(BigradedPoly.one(), 4)
    with pytest.raises(InputError, match="surfaces"):
        verify_samehodge(four, k3_surface(), 2)


def test_surface_validation():
    with pytest.raises(InputError, match="violates"):
        SurfaceHodge(BigradedPoly.from_table([[1, 0, 1]]), compact=True)
    SurfaceHodge(BigradedPoly.from_table([[1, 0, 1]]), compact=False)
    with pytest.raises(InputError, match="outside"):
        SurfaceHodge(BigradedPoly.from_table([[3, 0, 1]]))


def test_read_surface_file(fixtures_dir):
    assert read_surface_file(fixtures_dir / "k3.json") == k3_surface()


def test_cor1_kummer_vs_k3():
    x = trivial_orbifold(K3, 2)
    assert verify_cor1(kummer(), x, 4).passed


def test_cor1_identical_inputs():
    orb = random_orbifold(random.Random(7), dim=4)
    x = trivial_orbifold(orbifold_hodge_poly(orb), 4)
    assert verify_cor1(x, x, 3).passed


def test_cor1_different_sector_decompositions():
    # same total Hodge polynomial, split differently across sectors and shifts
    pt = BigradedPoly.one()
    base = BigradedPoly.from_table([[0, 0, 1], [2, 2, 1], [4, 4, 1], [1, 1, 1], [3, 3, 1]])
    a = OrbifoldData(4, (
        Sector("e", (SectorComponent(base),), True),
        Sector("g", (SectorComponent(pt, 1), SectorComponent(pt, 2))),
    ))
    b = OrbifoldData(4, (
        Sector("e", (SectorComponent(base),), True),
        Sector("g", (SectorComponent(BigradedPoly.from_table([[0, 0, 1], [1, 1, 1]]), 1),)),
    ))
    assert orbifold_hodge_poly(a) == orbifold_hodge_poly(b)
    x = trivial_orbifold(orbifold_hodge_poly(a), 4)
    assert verify_cor1(a, x, 4).passed
    assert verify_cor1(b, x, 4).passed
    assert wreath_series_product(a, 4) == wreath_series_product(b, 4)


def test_cor1_hypothesis_violation():
    x = trivial_orbifold(K3 + BigradedPoly.one(), 2)
    rep = verify_cor1(kummer(), x, 3)
    assert not rep.hypothesis_ok


def test_cor1_requires_untwisted_resolution():
    with pytest.raises(InputError, match="untwisted"):
        verify_cor1(kummer(), kummer(), 2)
