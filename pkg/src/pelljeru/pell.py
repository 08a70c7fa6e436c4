"""Exact Pell-number arithmetic and silver-ratio convergence diagnostics.

The Pell numbers (0, 1, 2, 5, 12, 29, ..., OEIS A000129) satisfy
``p_n = 2*p_{n-1} + p_{n-2}`` and their consecutive ratios converge to the
silver ratio 1 + sqrt(2).  Everything else in this package keys its grid
sizes and band splits off these values, so they are computed exactly.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass

import mpmath

# Guard for pell(): indices above this are refused so a fixed-width caller
# (128-bit integers) can mirror this module without silent overflow.
N_MAX = 88

SILVER_RATIO = 1.0 + math.sqrt(2.0)
# 1/(1+sqrt(2)) = sqrt(2)-1, the side ratio of consecutive Jerusalem squares.
INVERSE_SILVER = math.sqrt(2.0) - 1.0


class PellIndexError(ValueError):
    """Raised for Pell indices outside the supported range."""


_cache = [0, 1]


def pell(n: int) -> int:
    """Return the n-th Pell number exactly (p_0 = 0, p_1 = 1).

    Raises PellIndexError for n < 0 or n > N_MAX.
    """
    n = operator.index(n)
    if not 0 <= n <= N_MAX:
        raise PellIndexError(f"Pell index {n} outside supported range [0, {N_MAX}]")
    while len(_cache) <= n:
        _cache.append(2 * _cache[-1] + _cache[-2])
    return _cache[n]


@dataclass(frozen=True)
class RatioDiagnostic:
    """Convergence of the consecutive Pell ratio at index n.

    ratio            p_n / p_{n-1}
    error_to_silver  |ratio - (1 + sqrt(2))|
    error_to_k       |p_{n-1}/p_n - (sqrt(2) - 1)|
    """

    n: int
    ratio: float
    error_to_silver: float
    error_to_k: float


def ratio_diagnostic(n: int) -> RatioDiagnostic:
    """Ratio and error terms at index n (requires n >= 2, so p_{n-1} > 0).

    The errors shrink roughly by a factor (sqrt(2)-1)^2 ~ 0.17 per index and
    drop below double-precision resolution of the ratio near n = 22, so they
    are computed in extended precision and only then rounded to floats.
    """
    if n < 2:
        raise PellIndexError(f"ratio diagnostic needs n >= 2, got {n}")
    num, den = pell(n), pell(n - 1)
    with mpmath.workdps(140):
        silver = 1 + mpmath.sqrt(2)
        ratio = mpmath.mpf(num) / den
        error_to_silver = abs(ratio - silver)
        error_to_k = abs(mpmath.mpf(den) / num - (silver - 2))
        return RatioDiagnostic(n, float(ratio), float(error_to_silver), float(error_to_k))


def verify_recurrence(up_to: int) -> bool:
    """Check p_n = 2*p_{n-1} + p_{n-2} and an independent closed form.

    Returns True iff every index 0 <= n <= up_to satisfies the recurrence and
    matches ((1+sqrt(2))^n - (1-sqrt(2))^n) / (2*sqrt(2)) evaluated in high
    precision and rounded to the nearest integer.
    """
    if not 0 <= up_to <= N_MAX:
        raise PellIndexError(f"index {up_to} outside supported range [0, {N_MAX}]")
    for n in range(2, up_to + 1):
        if pell(n) != 2 * pell(n - 1) + pell(n - 2):
            return False
    # p_88 has 34 digits; 60 digits leaves ample headroom for exact rounding.
    with mpmath.workdps(60):
        root2 = mpmath.sqrt(2)
        for n in range(up_to + 1):
            closed = ((1 + root2) ** n - (1 - root2) ** n) / (2 * root2)
            if int(mpmath.nint(closed)) != pell(n):
                return False
    return True
