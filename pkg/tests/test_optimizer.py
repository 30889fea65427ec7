import warnings

import numpy as np
import pytest

from agentecon import models
from agentecon.optimizer import (
    NonUnimodalWarning,
    golden_section_max,
    maximize_on_interval,
    optimize_human_share,
    sweep_omega,
)
from conftest import random_parameters


def brute_force_share(params, t, lo=0.01, hi=0.999, step=1e-5):
    """Dense grid maximum of Model 2 output over the human share, vectorized."""
    x = np.arange(lo, hi + step / 2, step)
    a = params.alpha
    RH = x * params.R
    RA = params.R - RH
    s = 1.0 / (1.0 + np.exp(-params.k * (t - params.t0)))
    y = params.phi0 * params.N**a * RH ** (1 - a) * (1 + params.gamma * (RA / RH) ** params.beta * (1 + params.delta * s) ** params.beta)
    i = int(np.argmax(y))
    return float(x[i]), float(y[i])


def test_golden_section_on_parabola():
    x, fx = golden_section_max(lambda x: -(x - 0.3) ** 2, 0.0, 1.0, tol=1e-8)
    assert x == pytest.approx(0.3, abs=1e-8)
    assert fx == pytest.approx(0.0, abs=1e-15)


def test_golden_section_boundary_maximum():
    x, _ = golden_section_max(lambda x: x, 0.0, 1.0, tol=1e-6)
    assert x == 1.0


def test_baseline_optimum(baseline):
    result = optimize_human_share(baseline, t=20)
    assert result.best_share == pytest.approx(0.76, abs=0.02)
    x_grid, y_grid = brute_force_share(baseline, 20)
    assert abs(result.best_share - x_grid) < 1e-4
    assert result.best_output == pytest.approx(y_grid, rel=1e-6)
    assert len(result.profile) == 200
    assert result.best_output >= max(y for _, y in result.profile)


def test_optimum_varies_weakly_with_capability(baseline):
    shares = [optimize_human_share(baseline, t=t).best_share for t in (0, 5, 20, 60)]
    assert max(shares) - min(shares) < 0.02


def test_gamma_zero_goes_to_upper_bound(baseline):
    p = baseline.with_overrides(gamma=0.0)
    result = optimize_human_share(p, interval=(0.01, 0.999))
    assert result.best_share == pytest.approx(0.999, abs=1e-4)
    full = optimize_human_share(p, interval=(0.01, 1.0))
    assert full.best_share == pytest.approx(1.0, abs=1e-4)


def test_rejects_bad_interval(baseline):
    with pytest.raises(ValueError):
        optimize_human_share(baseline, interval=(0.0, 0.9))
    with pytest.raises(ValueError):
        optimize_human_share(baseline, interval=(0.5, 1.0))


@pytest.mark.parametrize("seed", range(20))
def test_matches_dense_grid_on_random_parameters(seed):
    params = random_parameters(np.random.default_rng(1000 + seed))
    t = 10.0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NonUnimodalWarning)
        result = optimize_human_share(params, t=t)
    x_grid, y_grid = brute_force_share(params, t)
    assert result.best_output == pytest.approx(y_grid, rel=1e-6)
    assert result.best_output >= y_grid * (1 - 1e-12) or abs(result.best_share - x_grid) <= 1e-4
    f = lambda x: models.model2_output(params, models.ResourceSplit.from_share(params.R, x), t)  # noqa: E731
    assert result.best_output >= f(0.01) and result.best_output >= f(0.999)


def test_non_unimodal_warning():
    f = lambda x: np.cos(12 * np.pi * x)  # noqa: E731
    with pytest.warns(NonUnimodalWarning):
        x, fx, _, _ = maximize_on_interval(f, 0.05, 0.95)
    assert fx == pytest.approx(1.0, abs=1e-6)


def test_sweep_omega_ordering(baseline):
    family = sweep_omega(baseline, [0.05, 0.10, 0.20], horizon=20, model_id=4)
    assert len(family) == 3
    for ts in family:
        assert all(b > a for a, b in zip(ts.values, ts.values[1:]))
    last = [ts.values[-1] for ts in family]
    assert last[0] < last[1] < last[2]


def test_sweep_single_value_is_direct_evaluation(baseline):
    (ts,) = sweep_omega(baseline, [0.05], horizon=20, model_id=5)
    assert ts.values == tuple(models.model5_output(baseline, float(t)) for t in range(20))


def test_sweep_tiny_omega_is_flat(baseline):
    spreads = []
    for omega in (1e-6, 1e-18, 1e-30):
        (ts,) = sweep_omega(baseline, [omega], horizon=20)
        spreads.append((max(ts.values) - min(ts.values)) / ts.values[0])
    assert spreads[0] > spreads[1] > spreads[2]
    assert spreads[2] < 1e-12


def test_sweep_rejects_empty_and_bad_model(baseline):
    with pytest.raises(ValueError):
        sweep_omega(baseline, [], 20)
    with pytest.raises(ValueError):
        sweep_omega(baseline, [0.1], 20, model_id=2)
    with pytest.raises(Exception):
        sweep_omega(baseline, [1.5], 20)
