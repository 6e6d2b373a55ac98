from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

from src.core.common_types import LimitCase


class SpectrumKind(str, Enum):
    ALL_OF_C = "all_of_C"
    COUNTABLE_CLOSURE = "countable_closure"
    EMPTY = "empty"
    WITHHELD = "withheld"


@dataclass(frozen=True)
class LimitSpectrum:
    kind: SpectrumKind
    points: Tuple[float, ...] = ()
    generator: str = ""
    case: Optional[LimitCase] = None
    markers: Tuple[str, ...] = ()
    multipliers: Tuple[float, ...] = ()
    notes: Tuple[str, ...] = field(default_factory=tuple)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "points": list(self.points),
            "generator": self.generator,
            "case": None if self.case is None else self.case.value,
            "markers": list(self.markers),
            "multipliers": list(self.multipliers),
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class ResolventMismatch:
    lam: complex
    weak_limit: complex
    homogenised: complex

    @property
    def gap(self) -> float:
        return abs(self.weak_limit - self.homogenised)


@dataclass(frozen=True)
class ConvexHullCheck:
    inside: bool
    interval: Tuple[float, float]
    offenders: Tuple[float, ...] = ()
