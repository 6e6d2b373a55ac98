"""
Well-posedness of -(alpha u')' = f on (0, 1) with Dirichlet data, the projected
inverse solution formula and the exact inner spectrum of a laminate.
"""


import logging
from functools import reduce
from typing import List, Optional, Tuple

import numpy as np
from numpy.polynomial import Polynomial

from src.core.common_types import HomogenisedLimit, LaminateProfile, LimitCase
from src.core.errors import ContractViolation, PoleError, WellPosednessError
from src.core.polynomial import polynomial_roots
from src.one_dim.common_types import GridFunction, SpectrumReport1D
from src.utils.settings import Tolerances, default_tolerances

log = logging.getLogger("main.one_dim.analysis")

DEGENERATE_POINTER = "m(1/alpha) = 0: the Dirichlet problem is not well posed, see homogenize case degenerate_a"


def mean(alpha: LaminateProfile) -> float:
    return float(np.mean(alpha.array))


def mean_inv(alpha: LaminateProfile) -> float:
    return float(np.mean(1.0 / alpha.array))


def mean_resolvent(
    alpha: LaminateProfile, lam: complex, tolerances: Optional[Tolerances] = None
) -> complex:
    """m((alpha - lam)^-1)"""

    tolerances = tolerances or default_tolerances()
    gaps = alpha.array - lam

    if np.any(np.abs(gaps) <= tolerances.zero * max(1.0, abs(lam))):
        raise PoleError(f"lambda = {lam} is a coefficient value of ({alpha})", location=lam)

    return complex(np.mean(1.0 / gaps))


def is_degenerate(alpha: LaminateProfile, tolerances: Optional[Tolerances] = None) -> bool:
    tolerances = tolerances or default_tolerances()
    scale = float(np.max(np.abs(1.0 / alpha.array)))

    return abs(mean_inv(alpha)) < tolerances.degeneracy * scale


def is_well_posed_1d(alpha: LaminateProfile, tolerances: Optional[Tolerances] = None) -> bool:
    return not is_degenerate(alpha, tolerances)


def _check_alignment(alpha: LaminateProfile, n: int) -> None:
    if n % alpha.slabs != 0:
        raise ContractViolation(
            f"Grid of {n} cells is not aligned with {alpha.slabs} slabs"
        )


def solve_projected_1d(
    alpha: LaminateProfile,
    psi: GridFunction,
    tolerances: Optional[Tolerances] = None,
) -> GridFunction:
    """
    phi with alpha*phi - m(alpha*phi) = psi and m(phi) = 0:
    phi = psi/alpha - m(psi/alpha) / (alpha * m(1/alpha))
    """

    tolerances = tolerances or default_tolerances()
    _check_alignment(alpha, psi.n)

    if abs(psi.mean()) > tolerances.mean * max(1.0, float(np.max(np.abs(psi.samples)))):
        raise ContractViolation(f"psi must have mean zero, got {psi.mean():.3e}")

    if is_degenerate(alpha, tolerances):
        raise WellPosednessError("Projected inverse does not exist", DEGENERATE_POINTER)

    inverse = 1.0 / alpha.sample(psi.n)
    correction = np.mean(inverse * psi.samples) / mean_inv(alpha)

    return GridFunction(inverse * (psi.samples - correction))


def projected_residual(alpha: LaminateProfile, phi: GridFunction, psi: GridFunction) -> float:
    flux = alpha.sample(phi.n) * phi.samples

    return float(np.max(np.abs(flux - np.mean(flux) - psi.samples)))


def _distinct_values(alpha: LaminateProfile) -> Tuple[List[float], List[int]]:
    values: List[float] = []
    weights: List[int] = []

    for v in alpha.values:
        if v in values:
            weights[values.index(v)] += 1
        else:
            values.append(v)
            weights.append(1)

    return values, weights


def mean_zero_numerator(values: List[float], weights: List[int]) -> Polynomial:
    """Sum_j w_j prod_{i != j} (v_i - lam), the cleared numerator of sum_j w_j/(v_j - lam)"""

    factors = [Polynomial([v, -1.0]) for v in values]
    one = Polynomial([1.0])

    return sum(
        (
            w * reduce(lambda a, b: a * b, factors[:j] + factors[j + 1 :], one)
            for j, w in enumerate(weights)
        ),
        Polynomial([0.0]),
    )


def inner_spectrum_1d(
    alpha: LaminateProfile, tolerances: Optional[Tolerances] = None
) -> SpectrumReport1D:
    tolerances = tolerances or default_tolerances()
    values, weights = _distinct_values(alpha)
    numerator = mean_zero_numerator(values, weights)

    roots, residuals = [], []

    for z in polynomial_roots(numerator):
        if min(abs(z - v) for v in values) <= 1e-12 * max(1.0, abs(z)):
            log.debug(f"Root {z} coincides with a coefficient value, dropped")
            continue

        terms = np.array([w / (v - z) for v, w in zip(values, weights)])
        residual = abs(terms.sum()) / np.sum(np.abs(terms))

        if residual > tolerances.residual:
            log.warning(f"Root {z} of the mean-zero equation failed its residual check ({residual:.2e})")
            continue

        if abs(z.imag) <= 1e-12 * max(1.0, abs(z)):
            z = float(z.real) + 0.0

        roots.append(z)
        residuals.append(float(residual))

    order = sorted(range(len(roots)), key=lambda i: (np.real(roots[i]), np.imag(roots[i])))

    log.debug(f"Inner spectrum of ({alpha}): values {values}, roots {[roots[i] for i in order]}")

    return SpectrumReport1D(
        value_points=tuple(values),
        mean_zero_roots=tuple(roots[i] for i in order),
        tolerance=tolerances.residual,
        residuals=tuple(residuals[i] for i in order),
    )


def g_limit_1d(alpha: LaminateProfile, tolerances: Optional[Tolerances] = None) -> HomogenisedLimit:
    """G-limit of the periodic oscillation alpha(n x) on (0, 1)"""

    if is_degenerate(alpha, tolerances):
        return HomogenisedLimit(
            case=LimitCase.DEGENERATE_A,
            dimension=1,
            mean=mean(alpha),
            mean_inverse=mean_inv(alpha),
            description="{0} x L2 relation",
            notes=("limit inner spectrum is empty",),
        )

    return HomogenisedLimit(
        case=LimitCase.SCALAR_1D,
        coefficients=(1.0 / mean_inv(alpha),),
        dimension=1,
        mean=mean(alpha),
        mean_inverse=mean_inv(alpha),
        description="1/m(1/alpha)",
    )
