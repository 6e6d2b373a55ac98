import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

import numpy as np

from src.core.errors import ProfileError


class SequenceSource(str, Enum):
    DIRICHLET_BOX = "dirichlet-box"
    USER = "user"


@dataclass(frozen=True)
class DiscreteSequence:
    """Strictly positive, separated reals lambda_k (cross-section eigenvalues)"""

    values: Tuple[float, ...]
    source: SequenceSource = SequenceSource.USER
    dim: Optional[int] = None
    k_max: Optional[int] = None

    def __post_init__(self) -> None:
        values = tuple(sorted(float(v) for v in self.values))
        object.__setattr__(self, "values", values)

        if len(values) == 0:
            raise ProfileError("A discrete sequence needs at least one value")

        if not all(math.isfinite(v) for v in values) or values[0] <= 0:
            raise ProfileError(f"Sequence values must be finite and positive, got min {values[0]}")

        if self.separation <= 0:
            raise ProfileError("Sequence values must be distinct")

    @classmethod
    def from_values(cls, values) -> "DiscreteSequence":
        return cls(tuple(sorted(set(float(v) for v in values))))

    @property
    def separation(self) -> float:
        if len(self.values) < 2:
            return math.inf

        return float(np.min(np.diff(self.values)))

    @property
    def minimum(self) -> float:
        return self.values[0]

    def __len__(self) -> int:
        return len(self.values)

    def to_dict(self) -> dict:
        return {
            "values": list(self.values),
            "separation": self.separation,
            "source": self.source.value,
            "dim": self.dim,
            "k_max": self.k_max,
        }


@dataclass(frozen=True)
class Witness:
    k: int
    lam: float
    d: float


@dataclass(frozen=True)
class QCriterionResult:
    satisfied: bool
    delta0: float
    witness: Optional[Witness]
    k_checked: int
    k_certified: int = 0
    mu_star: Optional[float] = None
    chi: float = 0.0
    skipped: Tuple[Tuple[int, float], ...] = field(default_factory=tuple)
    notes: Tuple[str, ...] = field(default_factory=tuple)


@dataclass(frozen=True)
class UniformBoundResult:
    satisfied: bool
    bound: float
    witness: Optional[Witness]
    k_checked: int
    k_certified: int = 0
    mu_star: Optional[float] = None
    notes: Tuple[str, ...] = field(default_factory=tuple)


@dataclass(frozen=True)
class CriterionStep:
    name: str
    holds: bool
    detail: str = ""


@dataclass(frozen=True)
class CriterionChain:
    steps: Tuple[CriterionStep, ...]

    def step(self, name: str) -> CriterionStep:
        return next(i for i in self.steps if i.name == name)

    @property
    def necessary_holds(self) -> bool:
        return self.step("p_alpha_nonzero_on_modes").holds

    @property
    def implies_criterion(self) -> bool:
        return self.necessary_holds and self.step("chi_nonzero").holds

    def to_dict(self) -> dict:
        return {
            "steps": [
                {"name": i.name, "holds": i.holds, "detail": i.detail} for i in self.steps
            ],
            "necessary_holds": self.necessary_holds,
            "implies_criterion": self.implies_criterion,
        }


@dataclass(frozen=True)
class ScanRoot:
    s: float
    t: float
    k: Optional[int]
    residual: float = 0.0


@dataclass(frozen=True)
class SpectrumReportDD:
    value_points: Tuple[float, ...]
    scan_roots: Tuple[ScanRoot, ...]
    mean_zero_shifts: Tuple[float, ...]
    bound: float
    continuous_caveat: bool = True
    t_count: int = 0
    notes: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def points(self) -> Tuple[float, ...]:
        """Sorted union of value points, scan roots and mean-zero shifts"""

        merged = sorted(
            set(self.value_points)
            | {i.s for i in self.scan_roots}
            | set(self.mean_zero_shifts)
        )

        return tuple(merged)

    def to_dict(self) -> dict:
        return {
            "value_points": list(self.value_points),
            "scan_roots": [
                {"s": i.s, "t": i.t, "k": i.k, "residual": i.residual}
                for i in self.scan_roots
            ],
            "mean_zero_shifts": list(self.mean_zero_shifts),
            "bound": self.bound,
            "continuous_caveat": self.continuous_caveat,
            "t_count": self.t_count,
            "notes": list(self.notes),
        }
