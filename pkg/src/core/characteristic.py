"""
Transition matrices of u'' = tau*u across one slab, the characteristic function
of a laminate (alpha, beta) and its overflow-safe tanh-scaled relatives.
"""


import logging
import math
from typing import List, Optional, Sequence, Tuple

from src.core.common_types import (
    CharacteristicEvaluation,
    CharacteristicForm,
    LaminateProfile,
    Regime,
    TransitionMatrix,
)
from src.core.errors import ProfileError
from src.utils.settings import Tolerances, default_tolerances

log = logging.getLogger("main.core.characteristic")


def tanh_complement(s: float) -> float:
    """1 - tanh(s) for s >= 0 without cancellation"""

    e = math.exp(-2.0 * s)

    return 2.0 * e / (1.0 + e)


def transition_matrix(h: float, tau: float) -> TransitionMatrix:
    if not (math.isfinite(h) and math.isfinite(tau)):
        raise ProfileError(f"Non-finite transition matrix input h={h}, tau={tau}")

    if h <= 0:
        raise ProfileError(f"Slab width must be positive, got {h}")

    if tau == 0:
        return TransitionMatrix(1.0, h, 0.0, 1.0, Regime.ZERO)

    mu = math.sqrt(abs(tau))
    x = mu * h

    if tau > 0:
        c, s = math.cosh(x), math.sinh(x)

        return TransitionMatrix(c, s / mu, mu * s, c, Regime.POSITIVE, mu)

    c, s = math.cos(x), math.sin(x)

    return TransitionMatrix(c, s / mu, -mu * s, c, Regime.NEGATIVE, mu)


def _validate_pairs(alpha: LaminateProfile, other: Sequence[float], name: str) -> List[float]:
    values = [float(i) for i in other]

    if len(values) != alpha.slabs:
        raise ProfileError(
            f"{name} has {len(values)} entries, the laminate has {alpha.slabs} slabs"
        )

    if not all(math.isfinite(i) for i in values):
        raise ProfileError(f"{name} contains non-finite entries")

    return values


def _propagate(
    alpha: Sequence[float], matrices: Sequence[Tuple[float, float, float, float]]
) -> Tuple[float, float]:
    """
    First component of A~_r ... A~_1 (a01, alpha_0 a11) where
    A~_j = diag(1, alpha_j) A_j diag(1, 1/alpha_j), together with the same
    product taken over absolute values.
    """

    a00, a01, a10, a11 = matrices[0]
    u, v = a01, alpha[0] * a11
    mu, mv = abs(u), abs(v)

    for a_j, (a00, a01, a10, a11) in zip(alpha[1:], matrices[1:]):
        u, v = a00 * u + a01 / a_j * v, a_j * a10 * u + a11 * v
        mu, mv = (
            abs(a00) * mu + abs(a01 / a_j) * mv,
            abs(a_j * a10) * mu + abs(a11) * mv,
        )

    return u, mu


def _scaled_entries(h: float, m: float) -> Tuple[float, float, float, float]:
    """Positive regime transition matrix divided by cosh(m*h)"""

    if m == 0:
        return 1.0, h, 0.0, 1.0

    t = math.tanh(m * h)

    return 1.0, t / m, m * t, 1.0


def _log_cosh(x: float) -> float:
    x = abs(x)

    return x + math.log1p(math.exp(-2.0 * x)) - math.log(2.0)


def _scale_factor(log_scale: float) -> float:
    try:
        return math.exp(log_scale)

    except OverflowError:
        return math.inf


def char_function(alpha: LaminateProfile, beta: Sequence[float]) -> CharacteristicEvaluation:
    """
    Characteristic function of (alpha, beta): it vanishes exactly when
    -(alpha u')' + beta u = 0 has a nontrivial solution with u(0) = u(1) = 0.

    When every beta_j/alpha_j >= 0 the tanh-scaled value is returned with the
    product of cosh(m_j h) in `scale`. Mixed regimes are evaluated raw and fall
    back to extracting only the positive-regime cosh factors on overflow.
    """

    beta = _validate_pairs(alpha, beta, "beta")
    ratios = [b / a for a, b in zip(alpha.values, beta)]
    h = alpha.h

    if all(tau >= 0 for tau in ratios):
        return _char_function_scaled(alpha, ratios)

    try:
        matrices = [
            (m.a00, m.a01, m.a10, m.a11)
            for m in (transition_matrix(h, tau) for tau in ratios)
        ]
        value, magnitude = _propagate(alpha.values, matrices)

        if math.isfinite(value) and math.isfinite(magnitude):
            return CharacteristicEvaluation(
                value=value,
                scale=1.0,
                form=CharacteristicForm.RAW,
                magnitude=magnitude,
            )

    except OverflowError:
        pass

    log.debug(f"Raw characteristic product overflows for alpha=({alpha}), using tanh form")

    return _char_function_scaled(alpha, ratios)


def _char_function_scaled(
    alpha: LaminateProfile, ratios: Sequence[float]
) -> CharacteristicEvaluation:
    h = alpha.h
    matrices = []
    log_scale = 0.0

    for tau in ratios:
        if tau >= 0:
            m = math.sqrt(tau)
            matrices.append(_scaled_entries(h, m))
            log_scale += _log_cosh(m * h)

        else:
            t = transition_matrix(h, tau)
            matrices.append((t.a00, t.a01, t.a10, t.a11))

    value, magnitude = _propagate(alpha.values, matrices)

    return CharacteristicEvaluation(
        value=value,
        scale=_scale_factor(log_scale),
        form=CharacteristicForm.TANH_SCALED,
        magnitude=magnitude,
    )


def _validate_rates(alpha: LaminateProfile, m: Sequence[float]) -> List[float]:
    rates = _validate_pairs(alpha, m, "m")

    if any(i <= 0 for i in rates):
        raise ProfileError(f"All m_j must be positive, got {rates}")

    return rates


def q_tilde_evaluation(alpha: LaminateProfile, m: Sequence[float]) -> CharacteristicEvaluation:
    rates = _validate_rates(alpha, m)
    matrices = [_scaled_entries(alpha.h, i) for i in rates]
    value, magnitude = _propagate(alpha.values, matrices)

    return CharacteristicEvaluation(
        value=value,
        scale=_scale_factor(sum(_log_cosh(i * alpha.h) for i in rates)),
        form=CharacteristicForm.TANH_SCALED,
        magnitude=magnitude,
    )


def q_tilde(alpha: LaminateProfile, m: Sequence[float]) -> float:
    return q_tilde_evaluation(alpha, m).value


def w_tilde(alpha: LaminateProfile, m: Sequence[float]) -> float:
    """q~ with every tanh(m_j h) replaced by 1"""

    rates = _validate_rates(alpha, m)
    matrices = [(1.0, 1.0 / i, i, 1.0) for i in rates]

    return _propagate(alpha.values, matrices)[0]


def _validate_t(t: float) -> float:
    t = float(t)

    if not 0 < t <= 1:
        raise ProfileError(f"t must lie in (0, 1], got {t}")

    return t


def p_alpha_evaluation(alpha: LaminateProfile, t: float) -> CharacteristicEvaluation:
    t = _validate_t(t)
    matrices = [(1.0, t, t, 1.0)] * alpha.slabs
    value, magnitude = _propagate(alpha.values, matrices)

    return CharacteristicEvaluation(value=value, magnitude=magnitude)


def p_alpha(alpha: LaminateProfile, t: float) -> float:
    return p_alpha_evaluation(alpha, t).value


def chi(alpha: LaminateProfile) -> float:
    values = alpha.values

    return math.prod(1.0 + values[j] / values[j + 1] for j in range(alpha.r))


def chi_magnitude(alpha: LaminateProfile) -> float:
    values = alpha.values

    return math.prod(1.0 + abs(values[j] / values[j + 1]) for j in range(alpha.r))


def is_chi_zero(alpha: LaminateProfile, tolerances: Optional[Tolerances] = None) -> bool:
    tolerances = tolerances or default_tolerances()

    return abs(chi(alpha)) <= tolerances.eps_p * chi_magnitude(alpha)
