"""The five production models and their building blocks.

All functions are pure. ``t`` is measured in years from the start of the
simulation and may be fractional; the scenario runner evaluates integer
years ``0 .. horizon - 1``.

Model overview
--------------
1. Pure human Cobb-Douglas production.
2. Human production scaled by an AI collaboration multiplier.
3. Model 2 amplified by the network multiplier ``1 + eta * p**2``.
4. Humans and AI produce independently; output is the sum of both terms.
5. Model 4 with the network multiplier applied to the AI term only.
"""

from __future__ import annotations

from typing import Callable

from .errors import DomainError
from .params import (
    AgentTrajectory,
    CapabilityCurve,
    NetworkState,
    ResourceSplit,
    SimulationParameters,
    TimeSeries,
)

MODEL_IDS = (1, 2, 3, 4, 5)


# -- building blocks ---------------------------------------------------------


def logistic_capability(curve: CapabilityCurve, t: float) -> float:
    return curve(t)


def effective_ai_resources(R_A: float, delta: float, s: float) -> float:
    if R_A < 0:
        raise DomainError(f"AI resources must be non-negative, got {R_A!r}")
    return (1.0 + delta * s) * R_A


def penetration_rate(traj: AgentTrajectory, N: float, t: float) -> float:
    """Agents per person at time ``t``; the models need this below one."""
    if N <= 0:
        raise DomainError("population N must be positive")
    p = traj(t) / N
    if p >= 1:
        raise DomainError(f"agent count {traj(t):.6g} reaches population {N:.6g} at t={t:g}; penetration must stay below 1")
    if p < 0:
        raise DomainError(f"negative agent count at t={t:g}")
    return p


def network_multiplier(eta: float, p: float) -> float:
    return NetworkState.at(eta, p).theta


def cobb_douglas(phi: float, labor: float, capital: float, alpha: float) -> float:
    """``phi * labor**alpha * capital**(1 - alpha)`` with 0**alpha taken as 0."""
    if labor == 0 or capital == 0:
        return 0.0
    return phi * labor**alpha * capital ** (1.0 - alpha)


def collaboration_multiplier(gamma: float, beta: float, R_H: float, R_A: float, delta: float, s: float) -> float:
    if R_H <= 0:
        raise DomainError("human resources R_H must be positive")
    return 1.0 + gamma * (R_A / R_H) ** beta * (1.0 + delta * s) ** beta


def ai_producer_output(phiA: float, A: float, R_A: float, delta: float, s: float, alpha: float) -> float:
    """AI output with agent count ``A`` and capability-enhanced resources."""
    return cobb_douglas(phiA, A, effective_ai_resources(R_A, delta, s), alpha)


# -- models ------------------------------------------------------------------


def model1_output(params: SimulationParameters) -> float:
    return cobb_douglas(params.phi0, params.N, params.R, params.alpha)


def model2_output(params: SimulationParameters, split: ResourceSplit | None = None, t: float = 0.0) -> float:
    split = split or params.collaborative_split()
    s = logistic_capability(params.capability, t)
    base = cobb_douglas(params.phi0, params.N, split.R_H, params.alpha)
    return base * collaboration_multiplier(params.gamma, params.beta, split.R_H, split.R_A, params.delta, s)


def model3_output(params: SimulationParameters, split: ResourceSplit | None = None, t: float = 0.0) -> float:
    p = penetration_rate(params.agents, params.N, t)
    return model2_output(params, split, t) * network_multiplier(params.eta, p)


def model4_human_output(params: SimulationParameters, t: float = 0.0) -> float:
    return cobb_douglas(params.phiH, params.N, (1.0 - params.omega) * params.R, params.alpha)


def model4_ai_output(params: SimulationParameters, t: float = 0.0) -> float:
    A = params.agents(t)
    if A < 0:
        raise DomainError(f"negative agent count at t={t:g}")
    s = logistic_capability(params.capability, t)
    return ai_producer_output(params.phiA, A, params.omega * params.R, params.delta, s, params.alpha)


def model4_output(params: SimulationParameters, t: float = 0.0) -> float:
    return model4_human_output(params, t) + model4_ai_output(params, t)


def model5_output(params: SimulationParameters, t: float = 0.0) -> float:
    p = penetration_rate(params.agents, params.N, t)
    return model4_human_output(params, t) + model4_ai_output(params, t) * network_multiplier(params.eta, p)


_EVALUATORS: dict[int, Callable[[SimulationParameters, float], float]] = {
    1: lambda params, t: model1_output(params),
    2: lambda params, t: model2_output(params, None, t),
    3: lambda params, t: model3_output(params, None, t),
    4: model4_output,
    5: model5_output,
}


def evaluate(model_id: int, params: SimulationParameters, t: float) -> float:
    """Output of model ``model_id`` at time ``t``.

    Models 2 and 3 use ``params.human_share`` for the resource split.
    """
    try:
        fn = _EVALUATORS[model_id]
    except KeyError:
        raise ValueError(f"unknown model id {model_id!r}; expected one of {MODEL_IDS}") from None
    return fn(params, t)


def simulate(model_id: int, params: SimulationParameters, horizon: int = 20, start_year: int = 0) -> TimeSeries:
    if horizon < 1:
        raise ValueError("horizon must be at least 1")
    values = [evaluate(model_id, params, float(t)) for t in range(start_year, start_year + horizon)]
    return TimeSeries(tuple(values), start_year, f"Model {model_id}")


def multiplier_series(params: SimulationParameters, horizon: int = 20, start_year: int = 0) -> TimeSeries:
    """Network multiplier along the agent trajectory."""
    values = [
        network_multiplier(params.eta, penetration_rate(params.agents, params.N, float(t)))
        for t in range(start_year, start_year + horizon)
    ]
    return TimeSeries(tuple(values), start_year, "Theta")
