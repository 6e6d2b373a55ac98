"""
Classical and holomorphic G-limits of periodically oscillating laminates
alpha(n x_1) on (0, 1)^d and the inner spectra of the limits.

On the sine basis e_k of (0, 1)^d the inverse of the homogenised resolvent acts
as the multiplier f_k(lambda); its lambda -> 0 values generate the limit
inner spectrum.
"""


import itertools
import logging
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from src.core.common_types import HomogenisedLimit, LaminateProfile, LimitCase
from src.core.errors import ContractViolation, PoleError, ProfileError, WellPosednessError
from src.homogenisation.common_types import (
    ConvexHullCheck,
    LimitSpectrum,
    ResolventMismatch,
    SpectrumKind,
)
from src.one_dim.analysis import (
    DEGENERATE_POINTER,
    g_limit_1d,
    is_degenerate,
    mean,
    mean_inv,
    mean_resolvent,
)
from src.utils.settings import Tolerances, default_tolerances

log = logging.getLogger("main.homogenisation.limits")


def classify(alpha: LaminateProfile, tolerances: Optional[Tolerances] = None) -> LimitCase:
    tolerances = tolerances or default_tolerances()

    if is_degenerate(alpha, tolerances):
        return LimitCase.DEGENERATE_A

    if abs(mean(alpha)) < tolerances.degeneracy * alpha.sup_norm:
        return LimitCase.FOURTH_ORDER_B

    return LimitCase.DIAGONAL_C


def limit_coefficient(
    alpha: LaminateProfile, d: int, tolerances: Optional[Tolerances] = None
) -> HomogenisedLimit:
    if d < 1:
        raise ContractViolation(f"Dimension must be >= 1, got {d}")

    if d == 1:
        return g_limit_1d(alpha, tolerances)

    case = classify(alpha, tolerances)
    m, m_inv = mean(alpha), mean_inv(alpha)

    if case == LimitCase.DEGENERATE_A:
        return HomogenisedLimit(
            case=case,
            dimension=d,
            mean=m,
            mean_inverse=m_inv,
            description="degenerate relation: gradients of the limit vanish",
            notes=(DEGENERATE_POINTER,),
        )

    if case == LimitCase.FOURTH_ORDER_B:
        return HomogenisedLimit(
            case=case,
            coefficients=(1.0 / m_inv,),
            dimension=d,
            mean=m,
            mean_inverse=m_inv,
            description=f"-(1/m(1/alpha)) Delta_(0,1) (-Delta_(0,1)^{d - 1})^-1",
        )

    return HomogenisedLimit(
        case=case,
        coefficients=(1.0 / m_inv,) + (m,) * (d - 1),
        dimension=d,
        mean=m,
        mean_inverse=m_inv,
        description="diag(1/m(1/alpha), m(alpha), ..., m(alpha))",
    )


def _validate_mode(k: Sequence[int]) -> Tuple[int, ...]:
    k = tuple(int(i) for i in k)

    if len(k) == 0 or any(i < 1 for i in k):
        raise ProfileError(f"Mode indices must be positive integers, got {k}")

    return k


def resolvent_multiplier(
    alpha: LaminateProfile,
    lam: complex,
    k: Sequence[int],
    tolerances: Optional[Tolerances] = None,
) -> complex:
    """
    f_k(lambda) = M |k|^2 / (k_1^2 + M N sum_{m >= 2} k_m^2),
    M = m((alpha - lambda)^-1), N = m(alpha - lambda)
    """

    tolerances = tolerances or default_tolerances()
    k = _validate_mode(k)

    resolvent_mean = mean_resolvent(alpha, lam, tolerances)
    shifted_mean = mean(alpha) - lam

    k1 = k[0] ** 2
    transverse = sum(i**2 for i in k[1:])
    denominator = k1 + resolvent_mean * shifted_mean * transverse

    if abs(denominator) <= tolerances.zero * (k1 + abs(resolvent_mean * shifted_mean) * transverse):
        raise PoleError(f"Multiplier of mode {k} has a pole at lambda = {lam}", location=lam)

    return complex(resolvent_mean * (k1 + transverse) / denominator)


def _modes(d: int, k_max: int) -> Tuple[np.ndarray, np.ndarray]:
    """k_1^2 and sum_{m >= 2} k_m^2 over k in {1..k_max}^d"""

    if d < 1 or k_max < 1:
        raise ContractViolation(f"d and k_max must be >= 1, got {d}, {k_max}")

    grid = np.array(list(itertools.product(range(1, k_max + 1), repeat=d)), dtype=np.int64)
    squares = grid**2

    return squares[:, 0], squares[:, 1:].sum(axis=1)


def _unique(points: Iterable[float], relative: float = 1e-12) -> Tuple[float, ...]:
    merged: List[float] = []

    for x in sorted(float(i) for i in points):
        if merged and abs(x - merged[-1]) <= relative * max(1.0, abs(x)):
            continue

        merged.append(x)

    return tuple(merged)


def limit_inner_spectrum(
    alpha: LaminateProfile,
    d: int,
    k_max: int,
    tolerances: Optional[Tolerances] = None,
) -> LimitSpectrum:
    tolerances = tolerances or default_tolerances()

    if d == 1:
        limit = g_limit_1d(alpha, tolerances)

        if limit.is_degenerate:
            return LimitSpectrum(SpectrumKind.EMPTY, case=limit.case)

        return LimitSpectrum(
            SpectrumKind.COUNTABLE_CLOSURE,
            points=limit.coefficients,
            generator="1/m(1/alpha)",
            case=limit.case,
        )

    case = classify(alpha, tolerances)
    m, m_inv = mean(alpha), mean_inv(alpha)

    if case == LimitCase.DEGENERATE_A:
        return LimitSpectrum(SpectrumKind.ALL_OF_C, case=case, generator="C")

    k1, transverse = _modes(d, k_max)

    if case == LimitCase.FOURTH_ORDER_B:
        factor = 1.0 / m_inv

        return LimitSpectrum(
            SpectrumKind.COUNTABLE_CLOSURE,
            points=_unique(factor * k1 / transverse),
            generator=f"{factor!r} * k1^2 / (k2^2 + ... + kd^2)",
            case=case,
            markers=("0", "inf"),
        )

    if m * m_inv < 0:
        message = "m(alpha) m(1/alpha) < 0: no spectrum formula for this diagonal limit"
        log.warning(f"({alpha}): {message}")

        return LimitSpectrum(SpectrumKind.WITHHELD, case=case, notes=(message,))

    points = (k1 + m_inv * m * transverse) / (m_inv * (k1 + transverse))

    return LimitSpectrum(
        SpectrumKind.COUNTABLE_CLOSURE,
        points=_unique(points),
        generator=(
            f"(k1^2 + {m_inv * m!r} * (k2^2 + ... + kd^2)) / "
            f"({m_inv!r} * (k1^2 + ... + kd^2))"
        ),
        case=case,
        multipliers=_unique(1.0 / points),
    )


def gamma_inner_spectrum(gamma: float, d: int, k_max: int) -> LimitSpectrum:
    """Inner spectrum of Gamma = diag(gamma, 1, ..., 1) on gradients of (0, 1)^d"""

    if not gamma > 0:
        raise ProfileError(f"gamma must be positive, got {gamma}")

    if d < 2:
        raise ContractViolation(f"Dimension must be >= 2, got {d}")

    k1, transverse = _modes(d, k_max)

    return LimitSpectrum(
        SpectrumKind.COUNTABLE_CLOSURE,
        points=_unique((gamma * k1 + transverse) / (k1 + transverse)),
        generator=f"({gamma!r} * k1^2 + k2^2 + ... + kd^2) / (k1^2 + ... + kd^2)",
    )


def weak_limit_resolvent(
    alpha: LaminateProfile, lam: complex, tolerances: Optional[Tolerances] = None
) -> complex:
    """Weak-* limit m((alpha + lambda)^-1) of (alpha(n .) + lambda)^-1"""

    return mean_resolvent(alpha, -lam, tolerances)


def resolvent_mismatch(
    alpha: LaminateProfile, lam: complex, tolerances: Optional[Tolerances] = None
) -> ResolventMismatch:
    """
    Compares the weak limit of the resolvents with the resolvent of the
    homogenised coefficient; they agree at lambda = 0 only.
    """

    if is_degenerate(alpha, tolerances):
        raise WellPosednessError("Homogenised coefficient does not exist", DEGENERATE_POINTER)

    homogenised = 1.0 / mean_inv(alpha) + lam

    if homogenised == 0:
        raise PoleError(f"lambda = {lam} is the homogenised coefficient", location=lam)

    return ResolventMismatch(
        lam=complex(lam),
        weak_limit=weak_limit_resolvent(alpha, lam, tolerances),
        homogenised=complex(1.0 / homogenised),
    )


def convex_hull_check(
    alpha: LaminateProfile,
    d: int,
    k_max: int,
    tolerances: Optional[Tolerances] = None,
) -> ConvexHullCheck:
    if np.any(alpha.array <= 0):
        raise ContractViolation(f"Convex hull containment needs a positive profile, got ({alpha})")

    tolerances = tolerances or default_tolerances()
    harmonic = 1.0 / mean_inv(alpha)

    if d == 1:
        interval = (min(alpha.values), max(alpha.values))
        points: Tuple[float, ...] = (harmonic,)

    else:
        interval = (min(harmonic, mean(alpha)), max(harmonic, mean(alpha)))
        points = limit_inner_spectrum(alpha, d, k_max, tolerances).points

    slack = 1e-12 * max(abs(interval[0]), abs(interval[1]))
    offenders = tuple(x for x in points if not interval[0] - slack <= x <= interval[1] + slack)

    return ConvexHullCheck(inside=not offenders, interval=interval, offenders=offenders)
