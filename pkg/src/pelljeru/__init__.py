"""Integer Jerusalem-square and Jerusalem-cube grids built on Pell numbers.

The construction tiles a square of side ``pell(n)`` with four corner blocks of
side ``pell(n-1)``, four edge blocks of side ``pell(n-2)`` flush against the
outer boundary, and a removed central cross; the 3D analog uses 8 corner and
12 edge blocks.  Because consecutive Pell ratios converge to the silver ratio
1 + sqrt(2), these integer grids approximate the irrational-ratio Jerusalem
fractal, and this package measures how well.
"""

from .pell import (
    N_MAX,
    SILVER_RATIO,
    INVERSE_SILVER,
    PellIndexError,
    RatioDiagnostic,
    pell,
    ratio_diagnostic,
    verify_recurrence,
)
from .grid2d import (
    MAX_BUILD_2D,
    Band,
    BandKind,
    BuildLimitError,
    CoordinateError,
    Grid2D,
    band_of,
    build2d,
    contains2d,
    corner_subgrid,
    subgrid,
)
from .grid3d import (
    MAX_BUILD_3D,
    Grid3D,
    build3d,
    contains3d,
    subgrid3,
)
from .exact import (
    ExactModel,
    UnitPoint,
    discrepancy,
    exact_contains,
    rasterize_exact,
)
from .metrics import (
    DimensionEstimate,
    MetricsReport,
    count2d_recurrence,
    count3d_recurrence,
    dim_analytic,
    dim_estimate,
    report,
)
from . import export

__version__ = "0.1.0"

__all__ = [
    "N_MAX",
    "SILVER_RATIO",
    "INVERSE_SILVER",
    "PellIndexError",
    "RatioDiagnostic",
    "pell",
    "ratio_diagnostic",
    "verify_recurrence",
    "MAX_BUILD_2D",
    "Band",
    "BandKind",
    "BuildLimitError",
    "CoordinateError",
    "Grid2D",
    "band_of",
    "build2d",
    "contains2d",
    "corner_subgrid",
    "subgrid",
    "MAX_BUILD_3D",
    "Grid3D",
    "build3d",
    "contains3d",
    "subgrid3",
    "ExactModel",
    "UnitPoint",
    "discrepancy",
    "exact_contains",
    "rasterize_exact",
    "DimensionEstimate",
    "MetricsReport",
    "count2d_recurrence",
    "count3d_recurrence",
    "dim_analytic",
    "dim_estimate",
    "report",
    "export",
]
