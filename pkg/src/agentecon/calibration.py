"""Back-solving baseline efficiencies from observed GDP.

``phi0`` (and ``phiH``, which is set equal to it) makes the pure-human
Cobb-Douglas function hit the human anchor's GDP exactly. ``phiA`` is the
exact inverse of the AI production term: the GDP residual left after human
output, divided by ``A**alpha * (omega * R * (1 + delta * s))**(1 - alpha)``.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Any, Mapping

from .errors import ConfigParseError, InfeasibleAnchorError, ParameterError
from .models import ai_producer_output, cobb_douglas
from .params import BASELINE_VALUES, SimulationParameters

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

# Value printed alongside the original model description. The inverse below
# lands within 0.1% of it when phiH is left unrounded; kept for reporting only.
PUBLISHED_PHI_A = 481.0


@dataclass(frozen=True)
class AnchorObservation:
    year_label: str
    Y: float
    N: float
    R: float

    def __post_init__(self) -> None:
        for key in ("Y", "N", "R"):
            value = getattr(self, key)
            if isinstance(value, bool) or not isinstance(value, (int, float)) or not value > 0:
                raise ParameterError(f"anchors.{self.year_label}.{key}", f"must be a positive number, got {value!r}")


@dataclass(frozen=True)
class AiCalibrationScenario:
    """Assumed AI allocation and capability at the AI anchor."""

    omega: float = 0.1
    s: float = 0.5
    delta: float = 0.2
    A: float = 1e8

    def __post_init__(self) -> None:
        if not 0 < self.omega < 1:
            raise ParameterError("calibration.omega", "must satisfy 0 < omega < 1")
        if not 0 < self.s < 1:
            raise ParameterError("calibration.s", "must satisfy 0 < s < 1")
        if not self.delta > 0:
            raise ParameterError("calibration.delta", "must satisfy delta > 0")
        if not self.A > 0:
            raise ParameterError("calibration.A", "must satisfy A > 0")


@dataclass(frozen=True)
class CalibrationSetup:
    human_anchor: str = "2010"
    ai_anchor: str = "2019"
    scenario: AiCalibrationScenario = AiCalibrationScenario()


@dataclass(frozen=True)
class Efficiencies:
    phi0: float
    phiH: float
    phiA: float


def calibrate_phi0(anchor: AnchorObservation, alpha: float) -> float:
    return anchor.Y / (anchor.N**alpha * anchor.R ** (1.0 - alpha))


def human_output_at(anchor: AnchorObservation, phiH: float, alpha: float, omega: float) -> float:
    return cobb_douglas(phiH, anchor.N, (1.0 - omega) * anchor.R, alpha)


def calibrate_phiA(
    anchor: AnchorObservation,
    phiH: float,
    alpha: float,
    scen: AiCalibrationScenario,
) -> float:
    residual = anchor.Y - human_output_at(anchor, phiH, alpha, scen.omega)
    if residual <= 0:
        raise InfeasibleAnchorError(
            f"anchor {anchor.year_label}: human output alone ({anchor.Y - residual:.6g}) "
            f"meets or exceeds observed GDP ({anchor.Y:.6g}); no positive AI efficiency fits"
        )
    # ai_producer_output with unit efficiency is exactly the denominator
    return residual / ai_producer_output(1.0, scen.A, scen.omega * anchor.R, scen.delta, scen.s, alpha)


def calibrate(anchors: Mapping[str, AnchorObservation], setup: CalibrationSetup, alpha: float) -> Efficiencies:
    if not 0 < alpha < 1:
        raise ParameterError("alpha", "must satisfy 0 < alpha < 1")
    for label in (setup.human_anchor, setup.ai_anchor):
        if label not in anchors:
            raise ParameterError("calibration", f"anchor {label!r} not defined")
    phi0 = calibrate_phi0(anchors[setup.human_anchor], alpha)
    phiA = calibrate_phiA(anchors[setup.ai_anchor], phi0, alpha, setup.scenario)
    return Efficiencies(phi0=phi0, phiH=phi0, phiA=phiA)


# -- anchor documents ----------------------------------------------------------

_ANCHOR_KEYS = {"Y", "N", "R"}
_SETUP_KEYS = {"human_anchor", "ai_anchor", "omega", "s", "delta", "A"}


def parse_anchors(block: Mapping[str, Any]) -> dict[str, AnchorObservation]:
    anchors = {}
    for label, fields in block.items():
        if not isinstance(fields, Mapping):
            raise ParameterError(f"anchors.{label}", "expected a table with Y, N and R")
        unknown = set(fields) - _ANCHOR_KEYS
        if unknown:
            raise ParameterError(f"anchors.{label}.{sorted(unknown)[0]}", "unknown key")
        missing = _ANCHOR_KEYS - set(fields)
        if missing:
            raise ParameterError(f"anchors.{label}.{sorted(missing)[0]}", "missing")
        anchors[str(label)] = AnchorObservation(str(label), fields["Y"], fields["N"], fields["R"])
    return anchors


def parse_setup(block: Mapping[str, Any]) -> CalibrationSetup:
    unknown = set(block) - _SETUP_KEYS
    if unknown:
        raise ParameterError(f"calibration.{sorted(unknown)[0]}", "unknown key")
    defaults = CalibrationSetup()
    scen_fields = {k: float(block[k]) for k in ("omega", "s", "delta", "A") if k in block}
    return CalibrationSetup(
        human_anchor=str(block.get("human_anchor", defaults.human_anchor)),
        ai_anchor=str(block.get("ai_anchor", defaults.ai_anchor)),
        scenario=AiCalibrationScenario(**scen_fields),
    )


def load_anchor_document(source: str | Path | None = None) -> tuple[dict[str, AnchorObservation], CalibrationSetup]:
    """Read anchors and the calibration setup from a TOML file.

    With no argument, the anchors shipped with the package are used.
    """
    if source is None:
        text = resources.files("agentecon").joinpath("data/anchors.toml").read_text(encoding="utf-8")
    else:
        text = Path(source).read_text(encoding="utf-8")
    try:
        doc = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        msg = str(exc).split(" (at line")[0]
        raise ConfigParseError(msg, getattr(exc, "lineno", None), getattr(exc, "colno", None)) from exc
    return parse_anchors(doc.get("anchors", {})), parse_setup(doc.get("calibration", {}))


def default_anchors() -> dict[str, AnchorObservation]:
    return load_anchor_document()[0]


def baseline_parameters(**overrides: float) -> SimulationParameters:
    """Baseline parameter set with efficiencies calibrated from the shipped anchors.

    Overriding ``alpha`` recalibrates the efficiencies; explicit ``phi0``,
    ``phiH`` or ``phiA`` overrides win over calibration.
    """
    values: dict[str, float] = dict(BASELINE_VALUES)
    values.update({k: v for k, v in overrides.items() if k not in ("phi0", "phiH", "phiA")})
    anchors, setup = load_anchor_document()
    eff = calibrate(anchors, setup, values["alpha"])
    values.update(phi0=eff.phi0, phiH=eff.phiH, phiA=eff.phiA)
    values.update({k: v for k, v in overrides.items() if k in ("phi0", "phiH", "phiA")})
    return SimulationParameters(**values)
