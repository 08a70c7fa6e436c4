"""The irrational-ratio Jerusalem square and its comparison to the Pell grids.

The continuous construction scales corner copies by k = sqrt(2) - 1 and edge
copies by k^2, with 2k + k^2 = 1 so the three bands tile the unit interval
exactly.  A depth-d model applies d rounds of cross removal; depth n-1 lines
up with the integer grid at level n (level 1 is the unremoved unit square).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .grid2d import Grid2D, build2d
from .pell import INVERSE_SILVER

# Raster guard, matching the dense 2D build guard (p_12 = 13860).
MAX_RASTER = 13860


@dataclass(frozen=True)
class ExactModel:
    """Continuous Jerusalem square scaled by k per rank, cut to a finite depth."""

    depth: int
    k: float = INVERSE_SILVER

    def __post_init__(self):
        if self.depth < 0:
            raise ValueError(f"depth must be nonnegative, got {self.depth}")
        if abs(2 * self.k + self.k * self.k - 1.0) >= 1e-12:
            raise ValueError(f"scaling ratio {self.k} does not satisfy 2k + k^2 = 1")


@dataclass(frozen=True)
class UnitPoint:
    """A point of the unit square, v pointing downward like raster rows."""

    u: float
    v: float

    def __post_init__(self):
        if not (0.0 <= self.u <= 1.0 and 0.0 <= self.v <= 1.0):
            raise ValueError(f"point ({self.u}, {self.v}) outside the unit square")


def _contains_scalar(k: float, depth: int, u: float, v: float) -> bool:
    k2 = k * k
    b1 = k            # low band [0, b1)
    b2 = k + k2       # mid band [b1, b2), high band [b2, 1]
    flush_hi = 1.0 - k2
    for _ in range(depth):
        u_mid = b1 <= u < b2
        v_mid = b1 <= v < b2
        if u_mid and v_mid:
            return False
        if u_mid or v_mid:
            # Edge copy of side k^2, flush against the outer boundary along
            # the non-mid axis; the rest of that band is removed cross arm.
            if u_mid:
                u = (u - b1) / k2
            elif u < b1:
                if u >= k2:
                    return False
                u = u / k2
            else:
                if u < flush_hi:
                    return False
                u = (u - flush_hi) / k2
            if v_mid:
                v = (v - b1) / k2
            elif v < b1:
                if v >= k2:
                    return False
                v = v / k2
            else:
                if v < flush_hi:
                    return False
                v = (v - flush_hi) / k2
        else:
            u = u / k if u < b1 else (u - b2) / k
            v = v / k if v < b1 else (v - b2) / k
    return True


def exact_contains(model: ExactModel, point: UnitPoint) -> bool:
    """True iff the point survives model.depth rounds of cross removal."""
    return _contains_scalar(model.k, model.depth, point.u, point.v)


def _contains_row(k: float, depth: int, u_row: np.ndarray, v_value: float) -> np.ndarray:
    """Vectorized membership for one raster row of u-coordinates."""
    k2 = k * k
    b1 = k
    b2 = k + k2
    flush_hi = 1.0 - k2
    u = u_row.copy()
    v = np.full_like(u, v_value)
    alive = np.ones(u.shape, dtype=bool)
    for _ in range(depth):
        if not alive.any():
            break
        u_mid = (u >= b1) & (u < b2)
        v_mid = (v >= b1) & (v < b2)
        alive &= ~(u_mid & v_mid)
        edge = (u_mid ^ v_mid) & alive
        corner = ~u_mid & ~v_mid & alive

        u_new = np.where(u < b1, u / k, (u - b2) / k)
        v_new = np.where(v < b1, v / k, (v - b2) / k)

        # Edge lanes: rescale the mid axis into the block, flush the other.
        u_edge = np.where(u_mid, (u - b1) / k2, np.where(u < b1, u / k2, (u - flush_hi) / k2))
        v_edge = np.where(v_mid, (v - b1) / k2, np.where(v < b1, v / k2, (v - flush_hi) / k2))
        in_block = (
            (u_mid | (u < k2) | (u >= flush_hi))
            & (v_mid | (v < k2) | (v >= flush_hi))
        )
        alive &= ~(edge & ~in_block)

        u = np.where(edge, u_edge, np.where(corner, u_new, u))
        v = np.where(edge, v_edge, np.where(corner, v_new, v))
    return alive


def rasterize_exact(model: ExactModel, resolution: int, max_raster: int | None = None) -> Grid2D:
    """Sample the model at cell centers on a resolution x resolution grid."""
    limit = MAX_RASTER if max_raster is None else max_raster
    if resolution < 1:
        raise ValueError(f"resolution must be >= 1, got {resolution}")
    if resolution > limit:
        raise ValueError(f"resolution {resolution} exceeds the dense-grid guard {limit}")
    centers = (np.arange(resolution, dtype=np.float64) + 0.5) / resolution
    out = np.empty((resolution, (resolution + 7) // 8), dtype=np.uint8)
    for j in range(resolution):
        out[j] = np.packbits(_contains_row(model.k, model.depth, centers, centers[j]))
    return Grid2D(resolution, out)


def discrepancy(n: int, max_build: int | None = None) -> float:
    """Disagreement fraction between the level-n grid and the exact model.

    Rasterizes the depth n-1 model at resolution pell(n) and counts cells on
    which it differs from the integer construction, normalized by the total
    cell count; always in [0, 1].
    """
    if n < 2:
        raise ValueError(f"discrepancy needs level >= 2, got {n}")
    grid = build2d(n, max_build=max_build)
    raster = rasterize_exact(ExactModel(depth=n - 1), grid.side, max_raster=grid.side)
    return grid.difference_count(raster) / grid.side**2
