"""Orbifold Hodge numbers of wreath-product orbifolds, computed exactly."""

from .elliptic import GenusTable, chi_y0, dmvv_expand, verify_q0_consistency
from .groups import FiniteGroup, WreathElement, build_wreath, conjugacy_classes, load_group, type_of
from .hilbert import SurfaceHodge, goettsche_series, verify_cor1, verify_samehodge
from .orbifold import (
    OrbifoldData,
    Sector,
    SectorComponent,
    orbifold_hodge_poly,
    shift_from_weights,
    symmetric_quotient_series,
    wreath_series_direct,
    wreath_series_product,
    wreath_shift,
)
from .series import BigradedPoly, Factor, SeriesQ, euler_product, specialize, sym_series, twist
from .wreath_types import WreathType, centralizer_order, class_size, count_types, enumerate_types

__version__ = "0.1.0"
