"""Resource-allocation search.

The human share x = R_H / R that maximizes Model 2 output is located by a
coarse grid scan followed by golden-section refinement around the best grid
point. The grid is kept on the result so the full output-vs-share profile
can be plotted.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .models import evaluate, model2_output
from .params import ResourceSplit, SimulationParameters, TimeSeries

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0  # 1/phi ~ 0.618


class NonUnimodalWarning(UserWarning):
    """The objective has more than one local maximum on the search grid."""


@dataclass(frozen=True)
class AllocationResult:
    best_share: float
    best_output: float
    profile: tuple[tuple[float, float], ...]
    t: float
    interval: tuple[float, float]


def golden_section_max(f: Callable[[float], float], a: float, b: float, tol: float = 1e-4, max_iter: int = 200) -> tuple[float, float]:
    """Maximize a unimodal ``f`` on ``[a, b]``.

    Returns ``(x, f(x))``. Iterates until the bracket is narrower than
    ``tol``; the bracket endpoints are also considered so a maximum sitting
    on the boundary is returned as the boundary itself.
    """
    if b < a:
        a, b = b, a
    lo, hi = a, b
    c = hi - INV_PHI * (hi - lo)
    d = lo + INV_PHI * (hi - lo)
    fc, fd = f(c), f(d)
    for _ in range(max_iter):
        if hi - lo <= tol:
            break
        if fc >= fd:
            hi, d, fd = d, c, fc
            c = hi - INV_PHI * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + INV_PHI * (hi - lo)
            fd = f(d)
    mid = 0.5 * (lo + hi)
    candidates = [(mid, f(mid)), (c, fc), (d, fd), (a, f(a)), (b, f(b))]
    return max(candidates, key=lambda item: item[1])


def _local_maxima(values: np.ndarray) -> list[int]:
    idx = []
    n = len(values)
    for i in range(n):
        left = values[i - 1] if i > 0 else -np.inf
        right = values[i + 1] if i < n - 1 else -np.inf
        if values[i] > left and values[i] >= right:
            idx.append(i)
    return idx


def maximize_on_interval(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    grid_points: int = 200,
    tol: float = 1e-4,
) -> tuple[float, float, np.ndarray, np.ndarray]:
    """Grid scan plus local golden-section refinement.

    Returns ``(x_best, f_best, grid_x, grid_f)``.
    """
    if not lo < hi:
        raise ValueError(f"empty search interval ({lo}, {hi})")
    if grid_points < 3:
        raise ValueError("grid_points must be at least 3")
    xs = np.linspace(lo, hi, grid_points)
    ys = np.array([f(float(x)) for x in xs])

    peaks = _local_maxima(ys)
    if len(peaks) > 1 and xs[peaks[-1]] - xs[peaks[0]] > tol:
        warnings.warn(
            f"objective has {len(peaks)} local maxima on the grid at "
            + ", ".join(f"{xs[i]:.4f}" for i in peaks),
            NonUnimodalWarning,
            stacklevel=3,
        )
    i = int(np.argmax(ys))
    a = float(xs[max(i - 1, 0)])
    b = float(xs[min(i + 1, grid_points - 1)])
    x_best, f_best = golden_section_max(f, a, b, tol=tol)
    if f_best < ys[i]:
        x_best, f_best = float(xs[i]), float(ys[i])
    return x_best, f_best, xs, ys


def optimize_human_share(
    params: SimulationParameters,
    t: float = 20.0,
    interval: tuple[float, float] = (0.01, 0.999),
    tol: float = 1e-4,
    grid_points: int = 200,
) -> AllocationResult:
    """Human resource share maximizing Model 2 output at time ``t``."""
    lo, hi = interval
    if not 0 < lo < hi <= 1:
        raise ValueError(f"interval must satisfy 0 < lo < hi <= 1, got {interval}")
    if hi == 1 and params.gamma > 0:
        raise ValueError("hi = 1 is only allowed when gamma = 0")

    def objective(x: float) -> float:
        return model2_output(params, ResourceSplit.from_share(params.R, x), t)

    x_best, f_best, xs, ys = maximize_on_interval(objective, lo, hi, grid_points, tol)
    profile = tuple((float(x), float(y)) for x, y in zip(xs, ys))
    return AllocationResult(x_best, f_best, profile, float(t), (lo, hi))


def sweep_omega(
    params: SimulationParameters,
    omegas: Sequence[float],
    horizon: int = 20,
    model_id: int = 4,
) -> list[TimeSeries]:
    """One trajectory per AI resource share for Model 4 or 5."""
    if model_id not in (4, 5):
        raise ValueError(f"omega sweeps apply to models 4 and 5, not {model_id}")
    if len(omegas) == 0:
        raise ValueError("omega sweep needs at least one value")
    if horizon < 1:
        raise ValueError("horizon must be at least 1")
    out = []
    for omega in omegas:
        p = params.with_overrides(omega=omega)
        values = tuple(evaluate(model_id, p, float(t)) for t in range(horizon))
        out.append(TimeSeries(values, 0, f"Model {model_id} (omega={omega:g})"))
    return out
