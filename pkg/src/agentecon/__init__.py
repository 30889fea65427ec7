"""Deterministic production models of human and AI-agent collaboration."""

from .calibration import baseline_parameters, calibrate_phi0, calibrate_phiA
from .errors import DomainError, InfeasibleAnchorError, ParameterError
from .models import (
    effective_ai_resources,
    evaluate,
    logistic_capability,
    model1_output,
    model2_output,
    model3_output,
    model4_ai_output,
    model4_human_output,
    model4_output,
    model5_output,
    network_multiplier,
    penetration_rate,
    simulate,
)
from .optimizer import optimize_human_share, sweep_omega
from .params import ResourceSplit, SimulationParameters, TimeSeries
from .scenario import ScenarioSpec, experiment_catalog, run_scenario

__version__ = "0.1.0"
