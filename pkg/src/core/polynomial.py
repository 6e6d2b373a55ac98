"""
Polynomial tools: exact coefficients of p_alpha(t), companion matrix roots with
Newton polishing, exact root counting on an interval.
"""


import logging
from typing import Callable, List, Optional

import numpy as np
import sympy
from numpy.polynomial import Polynomial

from src.core.common_types import LaminateProfile
from src.core.errors import ContractViolation

log = logging.getLogger("main.core.polynomial")

T = sympy.Symbol("t")


def p_alpha_polynomial(alpha: LaminateProfile) -> sympy.Poly:
    """Exact rational coefficients, built from the binary values of alpha_j"""

    values = [sympy.Rational(v) for v in alpha.values]
    t = sympy.Poly(T, T, domain="QQ")

    u, v = t, sympy.Poly(values[0], T, domain="QQ")

    for a_j in values[1:]:
        u, v = u + v * t * (1 / a_j), u * t * a_j + v

    return u


def p_alpha_coefficients(alpha: LaminateProfile) -> np.ndarray:
    """Float coefficients of p_alpha in ascending order"""

    coefficients = p_alpha_polynomial(alpha).all_coeffs()

    return np.array([float(c) for c in reversed(coefficients)])


def trimmed(poly: Polynomial, relative: float = 1e-14) -> Polynomial:
    scale = np.max(np.abs(poly.coef)) if len(poly.coef) else 0.0

    if scale == 0:
        return Polynomial([0.0])

    return poly.trim(relative * scale)


def newton_polish(
    poly: Callable, derivative: Callable, z: complex, steps: int = 3
) -> complex:
    value = poly(z)

    for _ in range(steps):
        slope = derivative(z)

        if slope == 0 or value == 0:
            break

        candidate = z - value / slope
        candidate_value = poly(candidate)

        if abs(candidate_value) >= abs(value):
            break

        z, value = candidate, candidate_value

    return z


def polynomial_roots(poly: Polynomial, relative: float = 1e-14) -> np.ndarray:
    """All complex roots from the companion matrix eigenvalues, Newton polished"""

    poly = trimmed(poly, relative)

    if poly.degree() < 1:
        return np.array([], dtype=complex)

    derivative = poly.deriv()

    return np.array(
        [newton_polish(poly, derivative, complex(z)) for z in poly.roots()],
        dtype=complex,
    )


def real_roots(
    poly: Polynomial,
    lower: float = -np.inf,
    upper: float = np.inf,
    imag_tolerance: float = 1e-9,
    relative: float = 1e-14,
) -> List[float]:
    roots = []

    for z in polynomial_roots(poly, relative):
        if abs(z.imag) > imag_tolerance * max(1.0, abs(z.real)):
            continue

        x = float(z.real) + 0.0

        if lower <= x <= upper:
            roots.append(x)

    return sorted(roots)


def count_roots_exact(poly: sympy.Poly, lower: float, upper: float) -> int:
    """Number of distinct real roots in the closed interval [lower, upper]"""

    if poly.is_zero:
        raise ContractViolation("Root counting on the zero polynomial")

    return int(poly.count_roots(sympy.Rational(lower), sympy.Rational(upper)))


def sign_changes(values: np.ndarray, magnitude: Optional[np.ndarray] = None) -> np.ndarray:
    """Indices i with values[i] and values[i + 1] of strictly opposite sign"""

    values = np.asarray(values, dtype=float)

    if magnitude is not None:
        values = np.where(np.abs(values) <= magnitude, 0.0, values)

    return np.nonzero(values[:-1] * values[1:] < 0)[0]
