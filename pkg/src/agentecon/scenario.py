"""Declarative experiments over the production models."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping

from .errors import DomainError, ParameterError
from .models import MODEL_IDS, multiplier_series, simulate
from .optimizer import AllocationResult, optimize_human_share
from .params import SimulationParameters, TimeSeries

QUANTITIES = ("output", "multiplier", "allocation")
METRICS = ("percent_gain", "absolute_gap")


@dataclass(frozen=True)
class Sweep:
    param: str
    values: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        if self.param not in SimulationParameters.names():
            raise ParameterError("sweep.param", f"unknown parameter {self.param!r}")
        if not self.values:
            raise ParameterError("sweep.values", "at least one value required")


@dataclass(frozen=True)
class Comparison:
    """Compare ``models[0]`` against the baseline ``models[1]``."""

    models: tuple[int, int]
    metric: str = "percent_gain"

    def __post_init__(self) -> None:
        object.__setattr__(self, "models", tuple(int(m) for m in self.models))
        if len(self.models) != 2:
            raise ParameterError("comparison.models", "exactly two models required")
        if self.metric not in METRICS:
            raise ParameterError("comparison.metric", f"must be one of {METRICS}")


@dataclass(frozen=True)
class ScenarioSpec:
    """One experiment.

    ``quantity`` selects what is recorded: model output, the network
    multiplier along the agent trajectory, or the Model 2 allocation profile
    (evaluated at year ``t_eval``). With ``matched_ai_share`` the
    collaborative models take ``human_share = 1 - omega`` so they use the
    same AI resources as the independent-producer models.
    """

    name: str
    model_ids: tuple[int, ...]
    horizon: int = 20
    overrides: Mapping[str, float] = field(default_factory=dict)
    sweep: Sweep | None = None
    comparison: Comparison | None = None
    quantity: str = "output"
    matched_ai_share: bool = False
    t_eval: float = 20.0
    title: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "model_ids", tuple(int(m) for m in self.model_ids))
        object.__setattr__(self, "overrides", dict(self.overrides))
        if not self.model_ids:
            raise ParameterError("models", "at least one model required")
        bad = [m for m in self.model_ids if m not in MODEL_IDS]
        if bad:
            raise ParameterError("models", f"unknown model id {bad[0]}")
        if isinstance(self.horizon, bool) or int(self.horizon) != self.horizon or self.horizon < 1:
            raise ParameterError("horizon", "must be an integer >= 1")
        if self.quantity not in QUANTITIES:
            raise ParameterError("quantity", f"must be one of {QUANTITIES}")
        unknown = set(self.overrides) - set(SimulationParameters.names())
        if unknown:
            raise ParameterError(f"overrides.{sorted(unknown)[0]}", "unknown parameter")
        if self.comparison is not None:
            missing = [m for m in self.comparison.models if m not in self.model_ids]
            if missing:
                raise ParameterError("comparison.models", f"model {missing[0]} not among the scenario's models")
        if self.quantity == "allocation" and self.sweep is not None:
            raise ParameterError("sweep", "allocation scenarios do not support sweeps")


@dataclass(frozen=True)
class RunReport:
    spec: ScenarioSpec
    series: tuple[TimeSeries, ...] = ()
    derived: tuple[TimeSeries, ...] = ()
    allocation: AllocationResult | None = None

    def get(self, name: str) -> TimeSeries:
        for s in self.series + self.derived:
            if s.name == name:
                return s
        raise KeyError(name)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(s.name for s in self.series + self.derived)


def _merge(base: SimulationParameters, overrides: Mapping[str, float], where: str) -> SimulationParameters:
    try:
        return base.with_overrides(overrides)
    except ParameterError as exc:
        raise ParameterError(f"{where}.{exc.key}", str(exc).split(": ", 1)[-1]) from exc


def _match_shares(params: SimulationParameters) -> SimulationParameters:
    matched = params.with_overrides(human_share=1.0 - params.omega)
    collab, indep = matched.collaborative_split(), matched.independent_split()
    if not (
        math.isclose(collab.R_A, params.omega * params.R, rel_tol=1e-12)
        and math.isclose(indep.R_A, collab.R_A, rel_tol=1e-12)
    ):
        raise DomainError("matched scenario gives the models different AI resources")
    return matched


def _label(base: str, sweep: Sweep | None, value: float | None) -> str:
    return base if sweep is None else f"{base} ({sweep.param}={value:g})"


def _compare(a: TimeSeries, b: TimeSeries, metric: str, name: str) -> TimeSeries:
    if metric == "percent_gain":
        values = [(ya - yb) / yb for ya, yb in zip(a.values, b.values)]
    else:
        values = [ya - yb for ya, yb in zip(a.values, b.values)]
    return TimeSeries(tuple(values), a.start_year, name)


def run_scenario(spec: ScenarioSpec, base: SimulationParameters) -> RunReport:
    params = _merge(base, spec.overrides, "overrides")
    if spec.matched_ai_share:
        params = _match_shares(params)

    if spec.quantity == "allocation":
        return RunReport(spec, allocation=optimize_human_share(params, t=spec.t_eval))

    sweep_values: tuple[float | None, ...] = spec.sweep.values if spec.sweep else (None,)
    series: list[TimeSeries] = []
    derived: list[TimeSeries] = []
    for value in sweep_values:
        p = params
        if spec.sweep is not None:
            p = _merge(params, {spec.sweep.param: value}, "sweep")
            if spec.matched_ai_share:
                p = _match_shares(p)

        if spec.quantity == "multiplier":
            series.append(multiplier_series(p, spec.horizon).renamed(_label("Theta", spec.sweep, value)))
            continue

        by_model = {}
        for m in spec.model_ids:
            ts = simulate(m, p, spec.horizon).renamed(_label(f"Model {m}", spec.sweep, value))
            by_model[m] = ts
            series.append(ts)
        if spec.comparison is not None:
            a, b = spec.comparison.models
            kind = "gain" if spec.comparison.metric == "percent_gain" else "gap"
            name = _label(f"{kind} Model {a} vs Model {b}", spec.sweep, value)
            derived.append(_compare(by_model[a], by_model[b], spec.comparison.metric, name))

    return RunReport(spec, tuple(series), tuple(derived))


def experiment_catalog() -> list[ScenarioSpec]:
    """Built-in experiments, one per published figure."""
    return [
        ScenarioSpec("fig1", (2,), title="Model 2: total social output with AI collaboration"),
        ScenarioSpec("fig2", (2,), quantity="allocation", title="Model 2: output vs human resource share"),
        ScenarioSpec(
            "fig3",
            (3,),
            quantity="multiplier",
            sweep=Sweep("eta", (0.05, 0.07, 0.10)),
            title="Model 3: network effect multiplier over time",
        ),
        ScenarioSpec(
            "fig4",
            (2, 3),
            comparison=Comparison((3, 2), "percent_gain"),
            title="Model 3 vs Model 2: output with and without network effects",
        ),
        ScenarioSpec(
            "fig5",
            (4,),
            sweep=Sweep("omega", (0.05, 0.10, 0.20)),
            title="Model 4: output by AI resource share",
        ),
        ScenarioSpec(
            "fig6",
            (2, 4),
            comparison=Comparison((4, 2), "percent_gain"),
            matched_ai_share=True,
            title="Model 4 vs Model 2 at the same AI resource share",
        ),
        ScenarioSpec(
            "fig7",
            (4, 5),
            comparison=Comparison((5, 4), "absolute_gap"),
            title="Model 5 vs Model 4: independent AI production with and without network effects",
        ),
    ]


def catalog_entry(name: str) -> ScenarioSpec:
    for spec in experiment_catalog():
        if spec.name == name:
            return spec
    raise KeyError(f"no experiment named {name!r}")

