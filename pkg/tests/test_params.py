import math

import pytest

from agentecon import ParameterError, ResourceSplit, SimulationParameters, TimeSeries
from agentecon.errors import DomainError
from agentecon.params import BASELINE_VALUES, AgentTrajectory, CapabilityCurve, NetworkState


@pytest.mark.parametrize(
    "field,value",
    [
        ("alpha", 0.0),
        ("alpha", 1.0),
        ("alpha", 1.5),
        ("omega", 0.0),
        ("omega", 1.0),
        ("eta", -0.01),
        ("gamma", -1.0),
        ("delta", 0.0),
        ("k", 0.0),
        ("N", 0.0),
        ("R", -1.0),
        ("A0", -1.0),
        ("g", -1.0),
        ("phi0", 0.0),
        ("phiH", -2.0),
        ("phiA", 0.0),
        ("human_share", 0.0),
        ("human_share", 1.01),
        ("beta", math.nan),
    ],
)
def test_invariant_violations_name_the_field(baseline, field, value):
    with pytest.raises(ParameterError) as info:
        baseline.with_overrides({field: value})
    assert info.value.key == field


def test_unknown_override_rejected(baseline):
    with pytest.raises(ParameterError):
        baseline.with_overrides(theta=2.0)


def test_baseline_values(baseline):
    for key, value in BASELINE_VALUES.items():
        assert getattr(baseline, key) == value
    assert baseline.phiH == baseline.phi0


def test_parameters_are_immutable(baseline):
    with pytest.raises(Exception):
        baseline.alpha = 0.5


@pytest.mark.parametrize("share", [0.85, 0.1, 0.3333333333333333, 0.7, 1.0])
@pytest.mark.parametrize("R", [9.96e13, 1.0, 12345.678])
def test_split_conserves_total(R, share):
    split = ResourceSplit.from_share(R, share)
    assert split.R_H + split.R_A == R
    assert split.R_A >= 0


def test_split_rejects_zero_human_share():
    with pytest.raises(ParameterError):
        ResourceSplit.from_share(1.0, 0.0)


def test_capability_curve_midpoint_and_range():
    curve = CapabilityCurve(0.38, 5.0)
    assert curve(5.0) == 0.5
    assert all(0 < curve(t) < 1 for t in range(-40, 60))


def test_agent_trajectory():
    traj = AgentTrajectory(10.0, 2.0)
    assert traj(0) == 10.0
    assert traj(3) == 16.0


def test_network_state():
    assert NetworkState.at(0.07, 0.0).theta == 1.0
    assert NetworkState.at(0.0, 0.5).theta == 1.0
    with pytest.raises(DomainError):
        NetworkState.at(0.07, 1.0)


def test_time_series():
    ts = TimeSeries.from_values([1.0, 2.0, 3.0], start_year=2, name="x")
    assert ts.years == (2, 3, 4)
    assert list(ts) == [1.0, 2.0, 3.0]
    with pytest.raises(ValueError):
        TimeSeries(())
    with pytest.raises(DomainError):
        TimeSeries((1.0, math.inf))


def test_parameter_names_cover_table():
    names = SimulationParameters.names()
    for key in ("N", "R", "alpha", "beta", "gamma", "delta", "eta", "omega", "k", "t0", "A0", "g", "phi0", "phiH", "phiA"):
        assert key in names
