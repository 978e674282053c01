"""Built-in sector data and resolution tables for the standard examples.

Noncompact examples use Hodge numbers of compactly supported cohomology.
"""

from __future__ import annotations

from fractions import Fraction

from .hilbert import SurfaceHodge
from .orbifold import OrbifoldData, Sector, SectorComponent, shift_from_weights, trivial_orbifold
from .series import BigradedPoly

__all__ = [
    "K3",
    "CP2",
    "ABELIAN_SURFACE",
    "k3_surface",
    "cp2_surface",
    "abelian_surface",
    "cp2_z3_resolution",
    "ale_resolution",
    "symmetric_k3",
    "symmetric_cp2",
    "symmetric_abelian",
    "ale",
    "kummer",
    "cp2_z3",
    "orbifold_fixtures",
    "surface_fixtures",
    "resolution_pairs",
]

POINT = BigradedPoly.one()
K3 = BigradedPoly.from_table([[0, 0, 1], [2, 0, 1], [0, 2, 1], [1, 1, 20], [2, 2, 1]])
CP2 = BigradedPoly.from_table([[0, 0, 1], [1, 1, 1], [2, 2, 1]])
# (1 + x)^2 (1 + y)^2
ABELIAN_SURFACE = BigradedPoly.from_table(
    [[s, t, [1, 2, 1][s] * [1, 2, 1][t]] for s in range(3) for t in range(3)]
)


def k3_surface() -> SurfaceHodge:
    return SurfaceHodge(K3, compact=True, name="K3")


def cp2_surface() -> SurfaceHodge:
    return SurfaceHodge(CP2, compact=True, name="CP2")


def abelian_surface() -> SurfaceHodge:
    return SurfaceHodge(ABELIAN_SURFACE, compact=True, name="abelian surface")


def cp2_z3_resolution() -> SurfaceHodge:
    """Minimal resolution of CP2/Z3: three A2 chains of (-2)-curves."""
    return SurfaceHodge(BigradedPoly.from_table([[0, 0, 1], [1, 1, 7], [2, 2, 1]]), compact=True,
                        name="resolution of CP2/Z3")


def ale_resolution(nclasses: int) -> SurfaceHodge:
    """Minimal resolution of C^2/G with ``nclasses - 1`` exceptional curves."""
    table = BigradedPoly.from_table([[2, 2, 1], [1, 1, nclasses - 1]])
    return SurfaceHodge(table, compact=False, name="ALE resolution, |G_*|=%d" % nclasses)


def symmetric_k3() -> OrbifoldData:
    return trivial_orbifold(K3, 2, "K3 (trivial group)", compact=True)


def symmetric_cp2() -> OrbifoldData:
    return trivial_orbifold(CP2, 2, "CP2 (trivial group)", compact=True)


def symmetric_abelian() -> OrbifoldData:
    return trivial_orbifold(ABELIAN_SURFACE, 2, "abelian surface (trivial group)", compact=True)


def ale(nclasses: int) -> OrbifoldData:
    """``C^2/G`` for a finite ``G`` in SL2 with ``nclasses`` conjugacy classes.

    Every nontrivial class fixes only the origin with shift 1.
    """
    if nclasses < 1:
        raise ValueError("a group has at least one conjugacy class")
    sectors = [Sector("e", (SectorComponent(BigradedPoly.monomial(2, 2), 0, "C2/G"),), True)]
    for i in range(1, nclasses):
        sectors.append(Sector("c%d" % i, (SectorComponent(POINT, 1, "origin"),)))
    return OrbifoldData(2, tuple(sectors), "C2/G, |G_*|=%d" % nclasses)


def kummer() -> OrbifoldData:
    """Abelian surface modulo the involution ``x -> -x``."""
    invariant = BigradedPoly.from_table([[0, 0, 1], [2, 0, 1], [0, 2, 1], [1, 1, 4], [2, 2, 1]])
    tau_shift = shift_from_weights([Fraction(1, 2), Fraction(1, 2)])
    points = tuple(SectorComponent(POINT, int(tau_shift), "p%d" % i) for i in range(16))
    return OrbifoldData(
        2,
        (Sector("e", (SectorComponent(invariant, 0, "A/Z2"),), True), Sector("tau", points)),
        "Kummer: abelian surface / Z2",
        compact=True,
    )


def cp2_z3() -> OrbifoldData:
    """CP2 with ``a [z0:z1:z2] = [a z0 : a^-1 z1 : z2]``; three fixed points per nontrivial class."""
    sectors = [Sector("e", (SectorComponent(CP2, 0, "CP2/Z3"),), True)]
    for label, weights in (("a", (Fraction(1, 3), Fraction(2, 3))), ("a2", (Fraction(2, 3), Fraction(1, 3)))):
        shift = int(shift_from_weights(weights))
        sectors.append(Sector(label, tuple(SectorComponent(POINT, shift, "p%d" % j) for j in range(3))))
    return OrbifoldData(2, tuple(sectors), "CP2/Z3", compact=True)


def orbifold_fixtures() -> dict[str, OrbifoldData]:
    return {
        "example1_k3": symmetric_k3(),
        "example1_cp2": symmetric_cp2(),
        "example1_abelian": symmetric_abelian(),
        "example2_ale2": ale(2),
        "example2_ale3": ale(3),
        "example2_ale5": ale(5),
        "example3_kummer": kummer(),
        "example4_cp2_z3": cp2_z3(),
    }


def surface_fixtures() -> dict[str, SurfaceHodge]:
    return {
        "k3": k3_surface(),
        "cp2": cp2_surface(),
        "abelian": abelian_surface(),
        "cp2_z3_resolution": cp2_z3_resolution(),
        "ale2_resolution": ale_resolution(2),
        "ale3_resolution": ale_resolution(3),
        "ale5_resolution": ale_resolution(5),
    }


def resolution_pairs() -> list[tuple[str, str]]:
    """(orbifold fixture, surface fixture) pairs satisfying ``e(X) = e(Y, G)``."""
    return [
        ("example1_k3", "k3"),
        ("example1_cp2", "cp2"),
        ("example1_abelian", "abelian"),
        ("example2_ale2", "ale2_resolution"),
        ("example2_ale3", "ale3_resolution"),
        ("example2_ale5", "ale5_resolution"),
        ("example3_kummer", "k3"),
        ("example4_cp2_z3", "cp2_z3_resolution"),
    ]
