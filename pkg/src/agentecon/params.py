"""Parameter containers and the small value types the models are built from."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, fields, replace
from typing import Any, Iterator, Mapping, Sequence

from .errors import DomainError, ParameterError

# Literal baseline values. The efficiencies phi0/phiH/phiA are not listed:
# they are back-solved from the anchor observations (see calibration).
BASELINE_VALUES: dict[str, float] = {
    "N": 7.7e8,  # employed population, 2019
    "R": 9.96e13,  # capital stock, USD, 2019
    "alpha": 0.58625,  # labor share, 2019
    "beta": 0.35,
    "gamma": 0.55,
    "delta": 0.20,
    "eta": 0.07,
    "omega": 0.05,
    "k": 0.38,
    "t0": 5.0,
    "A0": 1.495e8,  # 2.3e8 generative-AI users x 65% regular business use
    "g": 5e6,
    "human_share": 0.85,  # R_H / R in the collaborative models
}


def _check(key: str, ok: bool, rule: str) -> None:
    if not ok:
        raise ParameterError(key, f"must satisfy {rule}")


@dataclass(frozen=True)
class SimulationParameters:
    """Full parameter vector for every model.

    ``human_share`` is the R_H / R split used by the collaborative models
    (2 and 3); the independent-producer models (4 and 5) use ``omega``.
    """

    N: float
    R: float
    alpha: float
    beta: float
    gamma: float
    delta: float
    eta: float
    omega: float
    k: float
    t0: float
    A0: float
    g: float
    phi0: float
    phiH: float
    phiA: float
    human_share: float = 0.85

    def __post_init__(self) -> None:
        for f in fields(self):
            value = getattr(self, f.name)
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ParameterError(f.name, f"expected a number, got {value!r}")
            if not math.isfinite(value):
                raise ParameterError(f.name, "must be finite")
        _check("N", self.N > 0, "N > 0")
        _check("R", self.R > 0, "R > 0")
        _check("alpha", 0 < self.alpha < 1, "0 < alpha < 1")
        _check("beta", self.beta > 0, "beta > 0")
        _check("gamma", self.gamma >= 0, "gamma >= 0")
        _check("delta", self.delta > 0, "delta > 0")
        _check("eta", self.eta >= 0, "eta >= 0")
        _check("omega", 0 < self.omega < 1, "0 < omega < 1")
        _check("k", self.k > 0, "k > 0")
        _check("A0", self.A0 >= 0, "A0 >= 0")
        _check("g", self.g >= 0, "g >= 0")
        _check("phi0", self.phi0 > 0, "phi0 > 0")
        _check("phiH", self.phiH > 0, "phiH > 0")
        _check("phiA", self.phiA > 0, "phiA > 0")
        _check("human_share", 0 < self.human_share <= 1, "0 < human_share <= 1")

    @classmethod
    def names(cls) -> tuple[str, ...]:
        return tuple(f.name for f in fields(cls))

    def with_overrides(self, overrides: Mapping[str, Any] | None = None, **kwargs: Any) -> SimulationParameters:
        changes = dict(overrides or {}, **kwargs)
        unknown = set(changes) - set(self.names())
        if unknown:
            raise ParameterError(sorted(unknown)[0], "unknown parameter")
        return replace(self, **{key: float(value) for key, value in changes.items()})

    def as_dict(self) -> dict[str, float]:
        return asdict(self)

    @property
    def capability(self) -> CapabilityCurve:
        return CapabilityCurve(self.k, self.t0)

    @property
    def agents(self) -> AgentTrajectory:
        return AgentTrajectory(self.A0, self.g)

    def collaborative_split(self) -> ResourceSplit:
        return ResourceSplit.from_share(self.R, self.human_share)

    def independent_split(self) -> ResourceSplit:
        return ResourceSplit.from_share(self.R, 1.0 - self.omega)


@dataclass(frozen=True)
class ResourceSplit:
    """Total resources partitioned between humans and AI.

    Build with :meth:`from_share`; R_A is computed as ``R_total - R_H`` so the
    two parts always sum back to the total.
    """

    R_total: float
    R_H: float
    R_A: float

    def __post_init__(self) -> None:
        if not self.R_H > 0:
            raise ParameterError("R_H", "human resources must be positive")
        if self.R_A < 0:
            raise ParameterError("R_A", "AI resources must be non-negative")

    @classmethod
    def from_share(cls, R_total: float, human_share: float) -> ResourceSplit:
        if not 0 < human_share <= 1:
            raise ParameterError("human_share", "must satisfy 0 < human_share <= 1")
        R_H = human_share * R_total
        return cls(R_total, R_H, R_total - R_H)

    @property
    def human_share(self) -> float:
        return self.R_H / self.R_total


@dataclass(frozen=True)
class CapabilityCurve:
    """Logistic AI capability index with rate ``k`` and inflection year ``t0``."""

    k: float
    t0: float

    def __call__(self, t: float) -> float:
        z = -self.k * (t - self.t0)
        # split on sign so exp() never overflows
        if z >= 0:
            e = math.exp(-z)
            return e / (1.0 + e)
        return 1.0 / (1.0 + math.exp(z))


@dataclass(frozen=True)
class AgentTrajectory:
    A0: float
    g: float

    def __call__(self, t: float) -> float:
        return self.A0 + self.g * t


@dataclass(frozen=True)
class NetworkState:
    p: float
    theta: float

    @classmethod
    def at(cls, eta: float, p: float) -> NetworkState:
        if not 0 <= p < 1:
            raise DomainError(f"penetration rate {p!r} outside [0, 1)")
        return cls(p, 1.0 + eta * p * p)


@dataclass(frozen=True)
class TimeSeries:
    """Annual trajectory; ``values[i]`` belongs to year ``start_year + i``."""

    values: tuple[float, ...]
    start_year: int = 0
    name: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        if not self.values:
            raise ValueError("time series must contain at least one value")
        if not all(math.isfinite(v) for v in self.values):
            raise DomainError(f"non-finite value in series {self.name!r}")

    @property
    def years(self) -> tuple[int, ...]:
        return tuple(range(self.start_year, self.start_year + len(self.values)))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[float]:
        return iter(self.values)

    def __getitem__(self, i: int) -> float:
        return self.values[i]

    def renamed(self, name: str) -> TimeSeries:
        return replace(self, name=name)

    @classmethod
    def from_values(cls, values: Sequence[float], start_year: int = 0, name: str = "") -> TimeSeries:
        return cls(tuple(values), start_year, name)
