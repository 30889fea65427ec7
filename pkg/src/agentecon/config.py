"""TOML configuration documents.

A document has up to four top-level blocks::

    [parameters]          # any SimulationParameters field; missing ones use the baseline
    alpha = 0.58625

    [anchors.2010]        # calibration anchors (default: the shipped set)
    Y = 6.19e12
    N = 7.7e8
    R = 3.93e13

    [calibration]         # which anchors feed phi0/phiH and phiA
    human_anchor = "2010"
    ai_anchor = "2019"

    [[scenarios]]
    name = "net"
    models = [2, 3]
    comparison = { models = [3, 2], metric = "percent_gain" }

Efficiencies not given explicitly are calibrated from the document's anchors
with the resolved ``alpha``.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Iterable, Mapping

import tomli_w

from .calibration import (
    AnchorObservation,
    CalibrationSetup,
    calibrate,
    load_anchor_document,
    parse_anchors,
    parse_setup,
)
from .errors import ConfigParseError, ConfigValidationError, ParameterError
from .params import BASELINE_VALUES, SimulationParameters
from .scenario import Comparison, ScenarioSpec, Sweep

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

TOP_LEVEL_KEYS = {"parameters", "anchors", "calibration", "scenarios"}
SCENARIO_KEYS = {
    "name",
    "models",
    "horizon",
    "overrides",
    "sweep",
    "comparison",
    "quantity",
    "matched_ai_share",
    "t_eval",
    "title",
}
EFFICIENCIES = ("phi0", "phiH", "phiA")


@dataclass(frozen=True)
class ConfigDocument:
    parameters: SimulationParameters
    anchors: dict[str, AnchorObservation]
    calibration: CalibrationSetup
    scenarios: tuple[ScenarioSpec, ...] = ()
    # parameter values written in the source document, before defaults
    explicit: dict[str, float] = field(default_factory=dict, compare=False)

    def with_sets(self, assignments: Mapping[str, float]) -> ConfigDocument:
        explicit = dict(self.explicit)
        explicit.update(assignments)
        params = resolve_parameters(explicit, self.anchors, self.calibration)
        return replace(self, parameters=params, explicit=explicit)


def _number(key: str, value: Any) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigValidationError(key, f"expected a number, got {value!r}")
    return float(value)


def resolve_parameters(
    explicit: Mapping[str, float],
    anchors: Mapping[str, AnchorObservation],
    setup: CalibrationSetup,
) -> SimulationParameters:
    unknown = set(explicit) - set(SimulationParameters.names())
    if unknown:
        key = sorted(unknown)[0]
        raise ConfigValidationError(f"parameters.{key}", "unknown parameter")
    values = dict(BASELINE_VALUES)
    values.update({k: _number(f"parameters.{k}", v) for k, v in explicit.items()})
    try:
        if not all(k in explicit for k in EFFICIENCIES):
            eff = calibrate(anchors, setup, values["alpha"])
            for key in EFFICIENCIES:
                if key not in explicit:
                    values[key] = getattr(eff, key)
        return SimulationParameters(**values)
    except ParameterError as exc:
        prefix = "" if "." in exc.key or exc.key == "calibration" else "parameters."
        raise ConfigValidationError(prefix + exc.key, str(exc).split(": ", 1)[-1]) from exc


def _scenario(index: int, block: Any) -> ScenarioSpec:
    where = f"scenarios[{index}]"
    if not isinstance(block, Mapping):
        raise ConfigValidationError(where, "expected a table")
    unknown = set(block) - SCENARIO_KEYS
    if unknown:
        raise ConfigValidationError(f"{where}.{sorted(unknown)[0]}", "unknown key")
    try:
        sweep = comparison = None
        if "sweep" in block:
            sweep = Sweep(block["sweep"]["param"], tuple(block["sweep"]["values"]))
        if "comparison" in block:
            c = block["comparison"]
            comparison = Comparison(tuple(c["models"]), c.get("metric", "percent_gain"))
        return ScenarioSpec(
            name=str(block.get("name", f"scenario{index + 1}")),
            model_ids=tuple(block.get("models", ())),
            horizon=block.get("horizon", 20),
            overrides={k: _number(f"{where}.overrides.{k}", v) for k, v in block.get("overrides", {}).items()},
            sweep=sweep,
            comparison=comparison,
            quantity=block.get("quantity", "output"),
            matched_ai_share=bool(block.get("matched_ai_share", False)),
            t_eval=float(block.get("t_eval", 20.0)),
            title=str(block.get("title", "")),
        )
    except ParameterError as exc:
        raise ConfigValidationError(f"{where}.{exc.key}", str(exc).split(": ", 1)[-1]) from exc
    except (KeyError, TypeError) as exc:
        raise ConfigValidationError(where, f"malformed scenario block ({exc})") from exc


def parse_config(text: str) -> ConfigDocument:
    try:
        raw = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        msg = str(exc).split(" (at line")[0]
        raise ConfigParseError(msg, getattr(exc, "lineno", None), getattr(exc, "colno", None)) from exc

    unknown = set(raw) - TOP_LEVEL_KEYS
    if unknown:
        raise ConfigValidationError(sorted(unknown)[0], "unknown top-level key")

    default_anchors, default_setup = load_anchor_document()
    try:
        anchors = parse_anchors(raw["anchors"]) if "anchors" in raw else default_anchors
        setup = parse_setup(raw["calibration"]) if "calibration" in raw else default_setup
    except ParameterError as exc:
        raise ConfigValidationError(exc.key, str(exc).split(": ", 1)[-1]) from exc
    except (TypeError, ValueError) as exc:
        raise ConfigValidationError("anchors", str(exc)) from exc

    explicit = raw.get("parameters", {})
    if not isinstance(explicit, Mapping):
        raise ConfigValidationError("parameters", "expected a table")
    params = resolve_parameters(explicit, anchors, setup)

    blocks = raw.get("scenarios", [])
    if not isinstance(blocks, list):
        raise ConfigValidationError("scenarios", "expected an array of tables ([[scenarios]])")
    scenarios = tuple(_scenario(i, b) for i, b in enumerate(blocks))
    return ConfigDocument(params, anchors, setup, scenarios, dict(explicit))


def load_config(source: str | Path | None = None) -> ConfigDocument:
    """Load a configuration document.

    ``source`` may be a :class:`~pathlib.Path` to a TOML file, or TOML text.
    ``None`` (or empty text) gives the fully-defaulted baseline document.
    """
    if source is None:
        return parse_config("")
    if isinstance(source, Path):
        try:
            text = source.read_text(encoding="utf-8")
        except OSError as exc:
            raise ConfigParseError(f"cannot read {source}: {exc.strerror}") from exc
        return parse_config(text)
    return parse_config(source)


def parse_assignments(items: Iterable[str]) -> dict[str, float]:
    """Turn ``key=value`` strings (CLI ``--set``) into parameter overrides."""
    out = {}
    for item in items:
        key, sep, value = item.partition("=")
        key = key.strip().removeprefix("parameters.")
        if not sep or not key:
            raise ConfigValidationError(item, "expected key=value")
        if key not in SimulationParameters.names():
            raise ConfigValidationError(f"parameters.{key}", "unknown parameter")
        try:
            out[key] = float(value)
        except ValueError:
            raise ConfigValidationError(f"parameters.{key}", f"not a number: {value!r}") from None
    return out


def _scenario_table(spec: ScenarioSpec) -> dict[str, Any]:
    table: dict[str, Any] = {
        "name": spec.name,
        "models": list(spec.model_ids),
        "horizon": spec.horizon,
        "quantity": spec.quantity,
        "matched_ai_share": spec.matched_ai_share,
        "t_eval": spec.t_eval,
        "title": spec.title,
    }
    if spec.overrides:
        table["overrides"] = dict(spec.overrides)
    if spec.sweep is not None:
        table["sweep"] = {"param": spec.sweep.param, "values": list(spec.sweep.values)}
    if spec.comparison is not None:
        table["comparison"] = {"models": list(spec.comparison.models), "metric": spec.comparison.metric}
    return table


def dump_config(doc: ConfigDocument) -> str:
    """Serialize with every parameter resolved, so the text alone reproduces the run."""
    setup = doc.calibration
    data: dict[str, Any] = {
        "parameters": doc.parameters.as_dict(),
        "anchors": {label: {"Y": a.Y, "N": a.N, "R": a.R} for label, a in doc.anchors.items()},
        "calibration": {
            "human_anchor": setup.human_anchor,
            "ai_anchor": setup.ai_anchor,
            "omega": setup.scenario.omega,
            "s": setup.scenario.s,
            "delta": setup.scenario.delta,
            "A": setup.scenario.A,
        },
    }
    if doc.scenarios:
        data["scenarios"] = [_scenario_table(s) for s in doc.scenarios]
    return tomli_w.dumps(data)
