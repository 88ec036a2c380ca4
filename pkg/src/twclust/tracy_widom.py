"""Tracy-Widom distribution with index one (GOE edge law).

The CDF is evaluated from an embedded high-resolution table (see
``_tw1_table`` and ``data/TW1_TABLE_PROVENANCE.md`` for how it was built and
verified) with monotone cubic interpolation in the body and analytic tail
extrapolation outside the crossover points where the tabulated CDF passes
1e-8 and 1 - 1e-8.  Tail asymptotics:

    left:   F(x)      ~ c * |x|^(-1/16) * exp(-|x|^3/24 - |x|^(3/2)/(3*sqrt(2)))
    right:  1 - F(x)  ~ c * x^(-3/4)    * exp(-(2/3) * x^(3/2))

Evaluations are pure and the distribution object is immutable, so a single
shared instance serves every concurrent test in the recursion.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.interpolate import PchipInterpolator
from scipy.optimize import brentq

from . import _tw1_table

# First two moments of TW1, frozen after verifying that quadrature over the
# embedded table reproduces them (see tests and the provenance note).
TW1_MEAN = -1.2065335745820
TW1_VARIANCE = 1.6077810345813
TW1_STD = 1.2679830576870101

_TAIL_EPS = 1e-8


def _left_log_tail(x):
    ax = np.abs(x)
    return -(ax**3) / 24.0 - ax**1.5 / (3.0 * np.sqrt(2.0)) - np.log(ax) / 16.0


def _right_log_tail(x):
    return -(2.0 / 3.0) * x**1.5 - 0.75 * np.log(x)


@dataclass(frozen=True)
class Tw1Distribution:
    """Tabulated TW1 law: CDF, survival, quantiles, first two moments."""

    grid: np.ndarray
    cdf_values: np.ndarray
    mean: float = TW1_MEAN
    std: float = TW1_STD
    _interp: PchipInterpolator = field(init=False, repr=False, compare=False)
    _lo: int = field(init=False, repr=False, compare=False)
    _hi: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        grid = np.asarray(self.grid, dtype=float)
        cdf = np.asarray(self.cdf_values, dtype=float)
        if grid.ndim != 1 or grid.shape != cdf.shape:
            raise ValueError("grid and cdf_values must be 1-d and aligned")
        if np.any(np.diff(grid) <= 0) or np.any(np.diff(cdf) <= 0):
            raise ValueError("grid and cdf_values must be strictly increasing")
        if grid[0] > -10.0 or grid[-1] < 6.0:
            raise ValueError("grid must cover at least [-10, 6]")
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "cdf_values", cdf)
        object.__setattr__(self, "_interp", PchipInterpolator(grid, cdf))
        object.__setattr__(self, "_lo", int(np.searchsorted(cdf, _TAIL_EPS)))
        object.__setattr__(
            self, "_hi", int(np.searchsorted(cdf, 1.0 - _TAIL_EPS, side="right") - 1)
        )

    # -- CDF / survival ----------------------------------------------------

    def cdf(self, x):
        x_arr = np.asarray(x, dtype=float)
        out = np.empty_like(x_arr)
        xlo, xhi = self.grid[self._lo], self.grid[self._hi]

        left = x_arr < xlo
        right = x_arr > xhi
        mid = ~(left | right)
        if mid.any():
            out[mid] = np.clip(self._interp(x_arr[mid]), 0.0, 1.0)
        if left.any():
            anchor = self.cdf_values[self._lo]
            out[left] = anchor * np.exp(
                _left_log_tail(x_arr[left]) - _left_log_tail(xlo)
            )
        if right.any():
            out[right] = 1.0 - self._survival_right(x_arr[right])
        return float(out) if np.isscalar(x) or x_arr.ndim == 0 else out

    def _survival_right(self, x):
        anchor_sf = 1.0 - self.cdf_values[self._hi]
        return anchor_sf * np.exp(_right_log_tail(x) - _right_log_tail(self.grid[self._hi]))

    def survival(self, x):
        """1 - cdf(x), via the direct tail formula deep in the right tail.

        The direct formula keeps tiny p-values meaningful instead of
        saturating at the resolution of 1 - cdf.
        """
        x_arr = np.asarray(x, dtype=float)
        out = np.empty_like(x_arr)
        xhi = self.grid[self._hi]
        right = x_arr > xhi
        if right.any():
            out[right] = self._survival_right(x_arr[right])
        if (~right).any():
            out[~right] = 1.0 - self.cdf(x_arr[~right])
        return float(out) if np.isscalar(x) or x_arr.ndim == 0 else out

    # -- inverse and moments -------------------------------------------------

    def quantile(self, q):
        """Inverse CDF by bracketed root finding on the interpolated table."""
        q = float(q)
        if not 0.0 < q < 1.0:
            raise ValueError("quantile level must be in (0, 1)")
        lo, hi = self.grid[0], self.grid[-1]
        if q <= self.cdf(lo):
            return float(lo)
        if q >= self.cdf(hi):
            return float(hi)
        return float(brentq(lambda s: self.cdf(s) - q, lo, hi, xtol=1e-12))

    def moments(self):
        return self.mean, self.std

    def moments_from_table(self):
        """Midpoint quadrature of (x dF, x^2 dF) over the embedded table."""
        mid = 0.5 * (self.grid[1:] + self.grid[:-1])
        df = np.diff(self.cdf_values)
        mean = float((mid * df).sum())
        var = float(((mid - mean) ** 2 * df).sum())
        return mean, np.sqrt(var)


_DEFAULT = None


def tw1_distribution():
    """Shared immutable Tw1Distribution built from the embedded table."""
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = Tw1Distribution(
            grid=np.asarray(_tw1_table.GRID),
            cdf_values=np.asarray(_tw1_table.CDF),
        )
    return _DEFAULT


def tw1_cdf(x):
    return tw1_distribution().cdf(x)


def tw1_survival(x):
    return tw1_distribution().survival(x)


def tw1_quantile(q):
    return tw1_distribution().quantile(q)


def tw1_moments():
    return tw1_distribution().moments()
