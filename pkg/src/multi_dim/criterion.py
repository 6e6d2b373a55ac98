"""
Well-posedness of -div(alpha(x_1) grad u) = f on (0, 1) x cross-section.

The operator decomposes into the Sturm-Liouville family D_alpha + alpha*lambda_k,
one member per cross-section eigenvalue. Bounded invertibility of the whole
family is decided through q~ at m_j = sqrt(lambda_k + sgn(alpha_j) d); large
modes are certified through chi(alpha) without evaluation.
"""


import logging
import math
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from numpy.polynomial import Polynomial

from src.core.characteristic import (
    chi,
    is_chi_zero,
    p_alpha_evaluation,
    q_tilde_evaluation,
    tanh_complement,
)
from src.core.common_types import LaminateProfile
from src.core.errors import ContractViolation, WellPosednessError
from src.core.polynomial import (
    count_roots_exact,
    p_alpha_coefficients,
    p_alpha_polynomial,
    real_roots,
)
from src.multi_dim.common_types import (
    CriterionChain,
    CriterionStep,
    DiscreteSequence,
    QCriterionResult,
    SequenceSource,
    UniformBoundResult,
    Witness,
)
from src.one_dim.analysis import DEGENERATE_POINTER, is_degenerate
from src.utils.settings import Tolerances, default_tolerances

log = logging.getLogger("main.multi_dim.criterion")

DEFAULT_DELTA_GRID = (1e-3, 1e-2, 1e-1)


def dirichlet_eigenvalues(dim: int, k_max: int) -> DiscreteSequence:
    """Distinct values of pi^2 * sum k_m^2 over k in {1..k_max}^dim"""

    if dim < 1 or k_max < 1:
        raise ContractViolation(f"dim and k_max must be >= 1, got {dim}, {k_max}")

    squares = np.arange(1, k_max + 1) ** 2
    sums = squares

    for _ in range(dim - 1):
        sums = np.add.outer(sums, squares).ravel()

    return DiscreteSequence(
        tuple(math.pi**2 * float(i) for i in np.unique(sums)),
        source=SequenceSource.DIRICHLET_BOX,
        dim=dim,
        k_max=k_max,
    )


def asymptotic_cutoff(
    alpha: LaminateProfile, tolerances: Optional[Tolerances] = None
) -> Optional[float]:
    """
    Smallest mu with |p_alpha(tanh(mu h)) - chi(alpha)| <= |chi(alpha)|/4, from
    |p_alpha(t) - chi| <= (1 - t) * sum_i i|c_i|. None when chi(alpha) = 0.
    """

    if is_chi_zero(alpha, tolerances):
        return None

    coefficients = p_alpha_coefficients(alpha)
    slope = float(np.sum(np.arange(len(coefficients)) * np.abs(coefficients)))
    target = abs(chi(alpha)) / 4

    if slope <= target:
        return 0.0

    q = target / slope
    s = -0.5 * math.log(q / (2.0 - q))

    # round up until the bound holds in floating point
    while slope * tanh_complement(s) > target:
        s = float(np.nextafter(s, math.inf))

    return s / alpha.h


def _tail_start(
    seq: DiscreteSequence, mu_star: Optional[float]
) -> int:
    if mu_star is None:
        return len(seq)

    for index, lam in enumerate(seq.values):
        if math.sqrt(lam) >= mu_star:
            return index

    return len(seq)


def _chi_zero_note(alpha: LaminateProfile, seq: DiscreteSequence) -> List[str]:
    if seq.source != SequenceSource.DIRICHLET_BOX:
        return ["chi(alpha) = 0: no tail certificate, every supplied mode was evaluated"]

    message = (
        f"asymptotic certification impossible: chi({alpha}) = 0, "
        f"only the first {len(seq)} modes were checked"
    )
    log.warning(message)

    return [message]


def qcrit_check(
    alpha: LaminateProfile,
    seq: DiscreteSequence,
    delta_grid: Sequence[float] = DEFAULT_DELTA_GRID,
    tolerances: Optional[Tolerances] = None,
) -> QCriterionResult:
    tolerances = tolerances or default_tolerances()
    signs = np.sign(alpha.array)
    magnitudes = sorted({abs(float(d)) for d in delta_grid if d != 0})

    mu_star = asymptotic_cutoff(alpha, tolerances)
    tail = _tail_start(seq, mu_star)
    notes = [] if mu_star is not None else _chi_zero_note(alpha, seq)

    zero_failure: Optional[Witness] = None
    failures: Dict[float, Witness] = {}
    verified: Dict[float, int] = {g: 0 for g in magnitudes}
    skipped: List[Tuple[int, float]] = []

    for k, lam in enumerate(seq.values[:tail]):
        mu = math.sqrt(lam)

        if q_tilde_evaluation(alpha, [mu] * alpha.slabs).is_zero(tolerances.eps_p):
            zero_failure = zero_failure or Witness(k, lam, 0.0)

        for g in magnitudes:
            for d in (g, -g):
                arguments = lam + signs * d

                if np.any(arguments <= 0):
                    skipped.append((k, d))
                    continue

                evaluation = q_tilde_evaluation(alpha, np.sqrt(arguments))
                verified[g] += 1

                if evaluation.is_zero(tolerances.eps_p):
                    failures.setdefault(g, Witness(k, lam, d))

    delta0 = 0.0
    first_failure: Optional[Witness] = None

    # a magnitude whose pairs were all skipped is not verified
    for g in magnitudes:
        if g in failures:
            first_failure = failures[g]
            break

        if not verified[g]:
            break

        delta0 = g

    unverified = not any(verified.values())
    satisfied = zero_failure is None and (delta0 > 0 or unverified)

    if satisfied and not magnitudes:
        notes.append("empty delta grid: no perturbation was verified")
    elif satisfied and unverified:
        notes.append("every (k, d) pair was skipped: no perturbation was verified")

    if skipped:
        notes.append(f"{len(skipped)} (k, d) pairs skipped with lambda_k + sgn(alpha_j) d <= 0")
        log.debug(f"Skipped (k, d) pairs: {skipped}")

    if mu_star is not None:
        log.info(
            f"q~-criterion for ({alpha}): {tail} modes evaluated, "
            f"{len(seq) - tail} certified beyond mu* = {mu_star:.4g}"
        )

    return QCriterionResult(
        satisfied=satisfied,
        delta0=delta0 if zero_failure is None else 0.0,
        witness=None if satisfied else (zero_failure or first_failure),
        k_checked=tail,
        k_certified=len(seq) - tail,
        mu_star=mu_star,
        chi=chi(alpha),
        skipped=tuple(skipped),
        notes=tuple(notes),
    )


def well_posed_dd(
    alpha: LaminateProfile,
    seq: DiscreteSequence,
    tolerances: Optional[Tolerances] = None,
) -> bool:
    """
    Sufficient condition: p_alpha has no root in [t0, 1], t0 = tanh(sqrt(min lambda_k) h),
    decided by exact root counting on the rational coefficients.
    """

    if is_degenerate(alpha, tolerances):
        raise WellPosednessError("Well-posedness undecidable by the q~-criterion", DEGENERATE_POINTER)

    t0 = math.tanh(math.sqrt(seq.minimum) * alpha.h)
    poly = p_alpha_polynomial(alpha)

    if poly.is_zero:
        log.info(f"p_alpha vanishes identically for ({alpha})")
        return False

    roots = count_roots_exact(poly, t0, 1.0)
    log.debug(f"p_alpha of ({alpha}) has {roots} root(s) in [{t0:.6g}, 1]")

    return roots == 0


def positive_roots(alpha: LaminateProfile) -> List[float]:
    """Roots of p_alpha in (0, 1]; p_alpha(t)/t is what gets solved"""

    coefficients = p_alpha_coefficients(alpha)

    if len(coefficients) < 2:
        return []

    return [t for t in real_roots(Polynomial(coefficients[1:]), 0.0, 1.0) if t > 0]


def uniform_bound_check(
    alpha: LaminateProfile,
    seq: DiscreteSequence,
    bound: float,
    delta_grid: Optional[Sequence[float]] = None,
    tolerances: Optional[Tolerances] = None,
) -> UniformBoundResult:
    """
    Checks q~ != 0 at m_j = sqrt(lambda_k + delta/(alpha_j C)) for delta in [-1, 1],
    which bounds sup_k ||(D_alpha + alpha lambda_k)^-1|| by C.
    """

    tolerances = tolerances or default_tolerances()
    limit = 1.0 / (seq.minimum * float(np.min(np.abs(alpha.array))))

    if bound <= limit:
        raise ContractViolation(f"C must exceed 1/(min lambda_k * min|alpha_j|) = {limit:.6g}")

    deltas = np.linspace(-1.0, 1.0, 21) if delta_grid is None else np.asarray(delta_grid, dtype=float)

    if np.any(np.abs(deltas) > 1):
        raise ContractViolation("delta must lie in [-1, 1]")

    mu_star = asymptotic_cutoff(alpha, tolerances)
    tail = _tail_start(seq, mu_star)
    notes = [] if mu_star is not None else _chi_zero_note(alpha, seq)
    witness: Optional[Witness] = None

    for k, lam in enumerate(seq.values[:tail]):
        for delta in deltas:
            rates = np.sqrt(lam + delta / (alpha.array * bound))

            if q_tilde_evaluation(alpha, rates).is_zero(tolerances.eps_p):
                witness = Witness(k, lam, float(delta))
                break

        if witness is not None:
            break

    return UniformBoundResult(
        satisfied=witness is None,
        bound=bound,
        witness=witness,
        k_checked=tail if witness is None else witness.k + 1,
        k_certified=len(seq) - tail if witness is None else 0,
        mu_star=mu_star,
        notes=tuple(notes),
    )


def criterion_chain(
    alpha: LaminateProfile,
    seq: DiscreteSequence,
    tolerances: Optional[Tolerances] = None,
) -> CriterionChain:
    tolerances = tolerances or default_tolerances()
    steps = []

    degenerate = is_degenerate(alpha, tolerances)
    steps.append(
        CriterionStep(
            "mean_inv_nonzero",
            not degenerate,
            DEGENERATE_POINTER if degenerate else "",
        )
    )

    vanishing = [
        k
        for k, lam in enumerate(seq.values)
        if p_alpha_evaluation(alpha, math.tanh(math.sqrt(lam) * alpha.h)).is_zero(
            tolerances.eps_p
        )
    ]
    steps.append(
        CriterionStep(
            "p_alpha_nonzero_on_modes",
            not vanishing,
            f"p_alpha(t_k) = 0 for k in {vanishing[:10]}" if vanishing else f"{len(seq)} modes",
        )
    )

    steps.append(
        CriterionStep(
            "chi_nonzero",
            not is_chi_zero(alpha, tolerances),
            f"chi = {chi(alpha):.6g}",
        )
    )

    roots = [t for t in positive_roots(alpha) if t >= math.tanh(math.sqrt(seq.minimum) * alpha.h)]
    steps.append(
        CriterionStep(
            "p_alpha_nonzero_on_interval",
            not roots and not p_alpha_polynomial(alpha).is_zero,
            f"roots in [t0, 1]: {roots}" if roots else "",
        )
    )

    return CriterionChain(tuple(steps))
