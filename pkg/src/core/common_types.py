import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

from src.core.errors import ProfileError
from src.utils.settings import default_tolerances

log = logging.getLogger("main.core.common_types")


class Regime(str, Enum):
    ZERO = "zero"
    POSITIVE = "positive"
    NEGATIVE = "negative"


class CharacteristicForm(str, Enum):
    RAW = "raw"
    TANH_SCALED = "tanh-scaled"


class LimitCase(str, Enum):
    DEGENERATE_A = "degenerate_a"
    FOURTH_ORDER_B = "fourth_order_b"
    DIAGONAL_C = "diagonal_c"
    SCALAR_1D = "scalar_1d"


@dataclass(frozen=True)
class LaminateProfile:
    """
    Piecewise constant coefficient taking values[j] on the slab (j*h, (j+1)*h]
    of (0, 1), h = 1/(r+1). A slab value is rejected when |alpha_j| <= zero,
    the configured zero tolerance when zero is None.
    """

    values: Tuple[float, ...]
    zero: Optional[float] = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        values = tuple(float(v) for v in self.values)
        object.__setattr__(self, "values", values)

        if len(values) == 0:
            raise ProfileError("A laminate needs at least one slab")

        zero = default_tolerances().zero if self.zero is None else self.zero

        for j, value in enumerate(values):
            if not math.isfinite(value):
                raise ProfileError(f"alpha_{j} = {value} is not finite")

            if abs(value) <= zero:
                raise ProfileError(f"alpha_{j} = {value} vanishes (tolerance {zero})")

    @classmethod
    def from_values(
        cls, values: Iterable[float], zero: Optional[float] = None
    ) -> "LaminateProfile":
        return cls(tuple(values), zero)

    @classmethod
    def parse(cls, text: str, zero: Optional[float] = None) -> "LaminateProfile":
        """'1,-2,1' -> LaminateProfile((1.0, -2.0, 1.0))"""

        try:
            values = [float(i) for i in text.replace(" ", "").split(",") if i != ""]

        except ValueError as exc:
            raise ProfileError(f"Can not parse coefficient list {text!r}: {exc}") from exc

        return cls(tuple(values), zero)

    @property
    def r(self) -> int:
        return len(self.values) - 1

    @property
    def slabs(self) -> int:
        return len(self.values)

    @property
    def h(self) -> float:
        return 1.0 / len(self.values)

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)

    @property
    def sup_norm(self) -> float:
        return max(abs(v) for v in self.values)

    def shifted(self, s: float) -> "LaminateProfile":
        """alpha - s"""

        return LaminateProfile(tuple(v - s for v in self.values), self.zero)

    def scaled(self, mu: float) -> "LaminateProfile":
        return LaminateProfile(tuple(mu * v for v in self.values), self.zero)

    def sample(self, n: int) -> np.ndarray:
        """Values at the midpoints of n equal cells, n a multiple of the slab count"""

        return np.repeat(self.array, n // self.slabs)

    def __str__(self) -> str:
        return ",".join(f"{v:g}" for v in self.values)


@dataclass(frozen=True)
class TransitionMatrix:
    a00: float
    a01: float
    a10: float
    a11: float
    regime: Regime
    mu: float = 0.0

    @property
    def array(self) -> np.ndarray:
        return np.array([[self.a00, self.a01], [self.a10, self.a11]])

    @property
    def det(self) -> float:
        return self.a00 * self.a11 - self.a01 * self.a10

    def apply(self, v: Sequence[float]) -> np.ndarray:
        return self.array @ np.asarray(v, dtype=float)


@dataclass(frozen=True)
class CharacteristicEvaluation:
    value: float
    scale: float = 1.0
    form: CharacteristicForm = CharacteristicForm.RAW
    magnitude: float = 0.0

    @property
    def raw_value(self) -> float:
        if self.form == CharacteristicForm.RAW:
            return self.value

        # an infinite scale times an exact zero is still zero
        if self.value == 0:
            return 0.0

        return self.scale * self.value

    def is_zero(self, eps_p: float) -> bool:
        return abs(self.value) <= eps_p * self.magnitude


@dataclass(frozen=True)
class HomogenisedLimit:
    case: LimitCase
    coefficients: Tuple[float, ...] = ()
    dimension: int = 1
    mean: Optional[float] = None
    mean_inverse: Optional[float] = None
    description: str = ""
    notes: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def is_degenerate(self) -> bool:
        return self.case == LimitCase.DEGENERATE_A

    def to_dict(self) -> dict:
        return {
            "case": self.case.value,
            "coefficients": list(self.coefficients),
            "dimension": self.dimension,
            "mean": self.mean,
            "mean_inverse": self.mean_inverse,
            "description": self.description,
            "notes": list(self.notes),
        }
