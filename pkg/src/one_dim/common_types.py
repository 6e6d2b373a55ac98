from dataclasses import dataclass, field
from typing import Callable, Tuple, Union

import numpy as np

from src.core.errors import ContractViolation


@dataclass(frozen=True, eq=False)
class GridFunction:
    """Samples at the cell midpoints x_i = (i + 1/2)/n of a uniform grid on (0, 1)"""

    samples: np.ndarray

    def __post_init__(self) -> None:
        samples = np.array(self.samples, dtype=float)

        if samples.ndim != 1 or len(samples) < 2:
            raise ContractViolation(f"A grid function needs at least 2 samples, got {samples.shape}")

        if not np.all(np.isfinite(samples)):
            raise ContractViolation("Grid function samples must be finite")

        samples.setflags(write=False)
        object.__setattr__(self, "samples", samples)

    @classmethod
    def from_callable(cls, f: Callable[[np.ndarray], np.ndarray], n: int) -> "GridFunction":
        return cls(f(midpoints(n)))

    @property
    def n(self) -> int:
        return len(self.samples)

    def mean(self) -> float:
        return float(np.mean(self.samples))

    def centered(self) -> "GridFunction":
        return GridFunction(self.samples - self.mean())


def midpoints(n: int) -> np.ndarray:
    return (np.arange(n) + 0.5) / n


@dataclass(frozen=True)
class SpectrumReport1D:
    value_points: Tuple[float, ...]
    mean_zero_roots: Tuple[Union[float, complex], ...]
    tolerance: float
    residuals: Tuple[float, ...] = field(default_factory=tuple)

    @property
    def points(self) -> Tuple[float, ...]:
        reals = [i for i in self.mean_zero_roots if not isinstance(i, complex)]

        return tuple(sorted(set(self.value_points) | set(reals)))

    def to_dict(self) -> dict:
        return {
            "values": list(self.value_points),
            "mean_zero_roots": list(self.mean_zero_roots),
            "residuals": list(self.residuals),
            "tolerance": self.tolerance,
        }
