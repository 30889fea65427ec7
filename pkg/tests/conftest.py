from __future__ import annotations

import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from agentecon import SimulationParameters, baseline_parameters  # noqa: E402


@pytest.fixture(scope="session")
def baseline() -> SimulationParameters:
    return baseline_parameters()


def random_parameters(rng: np.random.Generator, horizon: int = 20) -> SimulationParameters:
    """A valid parameter vector whose agent count stays below N over ``horizon`` years."""
    N = 10 ** rng.uniform(6, 9.5)
    A0 = N * rng.uniform(0.0, 0.6)
    g = N * rng.uniform(0.0, 0.35) / horizon
    return SimulationParameters(
        N=N,
        R=10 ** rng.uniform(10, 15),
        alpha=rng.uniform(0.05, 0.95),
        beta=rng.uniform(0.05, 1.5),
        gamma=rng.uniform(0.0, 2.0),
        delta=rng.uniform(0.01, 2.0),
        eta=rng.uniform(0.0, 0.5),
        omega=rng.uniform(0.01, 0.9),
        k=rng.uniform(0.05, 1.5),
        t0=rng.uniform(-5, 25),
        A0=A0,
        g=g,
        phi0=10 ** rng.uniform(0, 3),
        phiH=10 ** rng.uniform(0, 3),
        phiA=10 ** rng.uniform(0, 3),
        human_share=rng.uniform(0.05, 0.99),
    )


@st.composite
def parameter_vectors(draw, horizon: int = 20) -> SimulationParameters:
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    return random_parameters(np.random.default_rng(seed), horizon)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        status, text = RESULTS[number]
        terminalreporter.write_line(f"[{status}] AC{number}: {text}")
