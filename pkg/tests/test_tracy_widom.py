import numpy as np
import pytest
from scipy.integrate import quad, simpson, solve_bvp
from scipy.special import airy

from twclust import (
    TW1_MEAN,
    TW1_STD,
    tw1_cdf,
    tw1_distribution,
    tw1_moments,
    tw1_quantile,
    tw1_survival,
)
from twclust.tracy_widom import TW1_VARIANCE, Tw1Distribution


class TestTails:
    def test_deep_left(self):
        assert tw1_cdf(-10.0) < 1e-6

    def test_deep_right(self):
        # 1 - F(6) is genuinely ~1.9e-6 for this law (right tail
        # exp(-(2/3) x^(3/2)) / (4 sqrt(pi) x^(3/4))); it drops below
        # 1e-6 just past x = 6.4
        assert tw1_cdf(6.0) == pytest.approx(1.0 - 1.94e-6, abs=2e-7)
        assert tw1_cdf(7.0) > 1.0 - 1e-6

    def test_left_survival(self):
        assert tw1_survival(-10.0) > 1.0 - 1e-6

    def test_far_tails_do_not_saturate(self):
        # tiny p-values stay meaningful well past the table
        assert 0.0 < tw1_survival(40.0) < 1e-60
        assert 0.0 < tw1_cdf(-12.5) < 1e-30

    def test_extreme_arguments(self):
        assert tw1_cdf(-60.0) == 0.0  # underflow, not negative
        assert tw1_survival(1e6) == 0.0
        assert tw1_cdf(1e6) == 1.0


class TestShape:
    def test_monotone_dense_sweep(self):
        xs = np.linspace(-12.0, 9.0, 100_000)
        vals = tw1_cdf(xs)
        assert np.all(np.diff(vals) >= 0)
        assert np.all((vals >= 0.0) & (vals <= 1.0))

    def test_complement_identity_in_grid_interior(self):
        dist = tw1_distribution()
        xs = dist.grid[1:-1:7]
        assert tw1_survival(xs) + tw1_cdf(xs) == pytest.approx(1.0, abs=1e-12)

    def test_survival_strictly_decreasing_on_grid(self):
        # restrict to where 1 - cdf is resolvable in float64
        dist = tw1_distribution()
        grid = dist.grid[dist.grid >= -8.4]
        sf = tw1_survival(grid)
        assert np.all(np.diff(sf) < 0)

    def test_scalar_and_array_forms(self):
        assert np.isscalar(tw1_cdf(0.0))
        out = tw1_cdf(np.array([-1.0, 0.0, 1.0]))
        assert out.shape == (3,)
        assert np.all(np.diff(out) > 0)


class TestQuantiles:
    @pytest.mark.parametrize("q", [0.5, 0.9, 0.99, 0.999])
    def test_survival_of_quantile(self, q):
        x = tw1_quantile(q)
        assert tw1_survival(x) == pytest.approx(1.0 - q, abs=1e-6)

    def test_median_near_known_location(self):
        assert -1.3 < tw1_quantile(0.5) < -1.2

    def test_bad_level(self):
        with pytest.raises(ValueError):
            tw1_quantile(1.5)


class TestMoments:
    def test_frozen_constants_vs_table_quadrature(self):
        dist = tw1_distribution()
        mean_q, std_q = dist.moments_from_table()
        assert abs(mean_q - TW1_MEAN) < 1e-3
        assert abs(std_q - TW1_STD) < 1e-3
        # tighter type-level consistency
        assert abs(mean_q - TW1_MEAN) < 1e-4
        assert abs(std_q - TW1_STD) < 1e-4

    def test_api(self):
        assert tw1_moments() == (TW1_MEAN, TW1_STD)
        assert TW1_STD == pytest.approx(np.sqrt(TW1_VARIANCE), abs=1e-12)
        assert TW1_MEAN == pytest.approx(-1.2065, abs=1e-3)
        assert TW1_STD == pytest.approx(1.268, abs=1e-3)

    def test_density_normalization(self):
        dist = tw1_distribution()
        xs = np.linspace(dist.grid[0], dist.grid[-1], 20001)
        dens = dist._interp.derivative()(np.clip(xs, dist.grid[0], dist.grid[-1]))
        total = simpson(np.clip(dens, 0.0, None), x=xs)
        assert abs(total - 1.0) < 1e-6


class TestConstruction:
    def test_rejects_nonmonotone_table(self):
        grid = np.linspace(-11, 7, 50)
        cdf = np.linspace(0.01, 0.99, 50)
        cdf[10] = cdf[9]
        with pytest.raises(ValueError):
            Tw1Distribution(grid=grid, cdf_values=cdf)

    def test_rejects_short_grid(self):
        grid = np.linspace(-5, 7, 40)
        cdf = np.linspace(0.01, 0.99, 40)
        with pytest.raises(ValueError, match="cover"):
            Tw1Distribution(grid=grid, cdf_values=cdf)


def _painleve_cdf_factory():
    """Independent TW1 evaluation: Hastings-McLeod solution of Painleve II.

    Solves q'' = s q + 2 q^3 as a boundary value problem (Airy data on the
    right, the sqrt(-s/2) expansion on the left) and assembles
    F1(s) = exp(-(I(s) + J(s)) / 2) with I = int q, J = int (x - s) q^2.
    Fully independent of the embedded table's Fredholm-determinant route.
    """
    s_left, s_right = -12.0, 8.0

    def rhs(s, y):
        return np.vstack([y[1], s * y[0] + 2.0 * y[0] ** 3])

    def q_left(s):
        return np.sqrt(-s / 2.0) * (1.0 + 1.0 / (8.0 * s**3) - 73.0 / (128.0 * s**6))

    def bc(ya, yb):
        return np.array([ya[0] - q_left(s_left), yb[0] - airy(s_right)[0]])

    mesh = np.linspace(s_left, s_right, 1201)
    guess = np.sqrt(airy(mesh)[0] ** 2 + np.maximum(-mesh, 0.0) / 2.0)
    sol = solve_bvp(rhs, bc, mesh, np.vstack([guess, np.gradient(guess, mesh)]),
                    tol=1e-10, max_nodes=100_000)
    assert sol.status == 0

    i_tail, _ = quad(lambda t: airy(t)[0], s_right, np.inf)

    def cdf(s):
        xs = np.linspace(s, s_right, 4001)
        q = sol.sol(xs)[0]
        i_val = simpson(q, x=xs) + i_tail
        j_val = simpson((xs - s) * q * q, x=xs)
        return float(np.exp(-0.5 * (i_val + j_val)))

    return cdf


def test_table_matches_painleve_oracle():
    """Spot-check >= 20 grid points against the independent ODE route."""
    oracle = _painleve_cdf_factory()
    points = [-8.0, -7.0, -6.0, -5.0, -4.5, -4.0, -3.5, -3.0, -2.5, -2.0,
              -1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 4.0,
              5.0, 6.0]
    assert len(points) >= 20
    worst = max(abs(tw1_cdf(s) - oracle(s)) for s in points)
    assert worst < 1e-6
