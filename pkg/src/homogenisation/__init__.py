from .common_types import ConvexHullCheck, LimitSpectrum, ResolventMismatch, SpectrumKind
from .limits import (
    classify,
    convex_hull_check,
    gamma_inner_spectrum,
    limit_coefficient,
    limit_inner_spectrum,
    resolvent_multiplier,
    resolvent_mismatch,
    weak_limit_resolvent,
)
