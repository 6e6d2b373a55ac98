"""
Discrete part of the inner spectrum in d >= 2: the shifts s for which
p_{alpha - s}(t) vanishes at some t = tanh(sqrt(lambda_k) h) or at the limit t = 1.
"""


import logging
import math
from typing import Dict, List, Optional

import numpy as np
from numpy.polynomial import Polynomial

from src.core.characteristic import p_alpha_evaluation
from src.core.common_types import LaminateProfile
from src.core.errors import ContractViolation
from src.core.polynomial import real_roots, sign_changes
from src.multi_dim.common_types import DiscreteSequence, ScanRoot, SpectrumReportDD
from src.one_dim.analysis import inner_spectrum_1d
from src.utils.settings import Tolerances, default_tolerances

log = logging.getLogger("main.multi_dim.scan")


def shifted_numerator(alpha: LaminateProfile, t: float) -> Polynomial:
    """
    p_{alpha - s}(t) * prod_{j >= 1} (alpha_j - s) as a polynomial in s, by
    propagating (t, a_0) through [[a_j, t], [a_j^2 t, a_j]], a_j = alpha_j - s.
    """

    shifted = [Polynomial([v, -1.0]) for v in alpha.values]
    u, v = Polynomial([t]), shifted[0]

    for a_j in shifted[1:]:
        u, v = a_j * u + t * v, t * a_j * a_j * u + a_j * v

    return u


def scan_parameters(alpha: LaminateProfile, seq: DiscreteSequence) -> Dict[float, Optional[int]]:
    """t_k = tanh(sqrt(lambda_k) h) mapped to the first mode producing it, plus t = 1"""

    ts: Dict[float, Optional[int]] = {}

    for k, lam in enumerate(seq.values):
        t = math.tanh(math.sqrt(lam) * alpha.h)

        if t < 1.0:
            ts.setdefault(t, k)

    ts[1.0] = None

    return ts


def s_grid(bound: float, step: float) -> np.ndarray:
    """Equispaced shifts on [-bound, bound], spacing at most step, endpoints exact"""

    return np.linspace(-bound, bound, max(2, math.ceil(2 * bound / step) + 1))


def _cross_check(
    numerator: Polynomial,
    roots: List[float],
    values: List[float],
    bound: float,
    step: float,
) -> int:
    grid = s_grid(bound, step)
    samples = numerator(grid)
    slack = 1e-9 * (grid[1] - grid[0])
    missed = 0

    for i in sign_changes(samples):
        lo, hi = grid[i] - slack, grid[i + 1] + slack

        if not any(lo <= x <= hi for x in roots + values):
            missed += 1

    return missed


def inner_spectrum_dd(
    alpha: LaminateProfile,
    seq: DiscreteSequence,
    bound: float,
    s_resolution: Optional[float] = None,
    tolerances: Optional[Tolerances] = None,
) -> SpectrumReportDD:
    tolerances = tolerances or default_tolerances()

    if bound <= alpha.sup_norm:
        raise ContractViolation(f"A = {bound} must exceed max|alpha_j| = {alpha.sup_norm}")

    values = sorted(set(alpha.values))
    found: List[ScanRoot] = []
    notes: List[str] = []
    missed = 0

    ts = scan_parameters(alpha, seq)

    for t, k in ts.items():
        numerator = shifted_numerator(alpha, t)
        accepted = []

        for s in real_roots(numerator, -bound, bound):
            if any(abs(s - v) <= 1e-10 * max(1.0, abs(v)) for v in values):
                continue

            evaluation = p_alpha_evaluation(alpha.shifted(s), t)
            residual = abs(evaluation.value) / max(evaluation.magnitude, 1e-300)

            if residual > tolerances.residual:
                log.warning(f"Scan root s={s!r} at t={t!r} fails re-evaluation ({residual:.2e})")
                continue

            accepted.append(s)
            found.append(ScanRoot(s=s, t=t, k=k, residual=residual))

        if s_resolution:
            missed += _cross_check(numerator, accepted, values, bound, s_resolution)

    if missed:
        notes.append(f"{missed} sign change(s) on the s-grid without a reported root")
        log.warning(f"Scan of ({alpha}): {missed} unexplained sign change(s) on the s-grid")

    shifts = tuple(
        s
        for s in inner_spectrum_1d(alpha, tolerances).mean_zero_roots
        if not isinstance(s, complex) and -bound <= s <= bound
    )

    found.sort(key=lambda i: (i.s, i.t))
    log.info(f"Scan of ({alpha}) over {len(ts)} t-values: {len(found)} root(s)")

    return SpectrumReportDD(
        value_points=tuple(values),
        scan_roots=tuple(found),
        mean_zero_shifts=shifts,
        bound=bound,
        continuous_caveat=True,
        t_count=len(ts),
        notes=tuple(notes),
    )
