"""
Finite-difference oracle for -(alpha u')' + beta u on (0, 1) with Dirichlet data.

Cells are aligned with the slabs, so alpha is constant on every cell and the
interface conditions are carried by the flux form.
"""


import logging
import traceback
from typing import List, Optional, Sequence

import numpy as np
import scipy.linalg

from src.core.common_types import LaminateProfile
from src.core.errors import ContractViolation, ConvergenceError, ProfileError, WellPosednessError
from src.oracle.common_types import FDOperator1D
from src.utils.settings import Tolerances, default_tolerances

log = logging.getLogger("main.oracle.fd")


def assemble_fd_1d(
    alpha: LaminateProfile, beta: Optional[Sequence[float]] = None, n: int = 1024
) -> FDOperator1D:
    beta = tuple(0.0 for _ in alpha.values) if beta is None else tuple(float(i) for i in beta)

    if len(beta) != alpha.slabs:
        raise ProfileError(f"beta has {len(beta)} entries, alpha has {alpha.slabs}")

    if not all(np.isfinite(beta)):
        raise ProfileError(f"beta = {beta} is not finite")

    if n % alpha.slabs != 0 or n < 2 * alpha.slabs:
        raise ContractViolation(f"{n} cells are not a slab-aligned grid for {alpha.slabs} slabs")

    cells_alpha = alpha.sample(n)
    cells_beta = np.repeat(np.asarray(beta), n // alpha.slabs)
    inv_dx2 = float(n) ** 2

    # beta at an interface node is the average of the adjacent slab values
    diagonal = (cells_alpha[:-1] + cells_alpha[1:]) * inv_dx2 + (cells_beta[:-1] + cells_beta[1:]) / 2.0
    off_diagonal = -cells_alpha[1:-1] * inv_dx2

    log.debug(f"({alpha}): assembled {n - 1} interior nodes, beta = {beta}")

    return FDOperator1D(alpha, beta, n, diagonal, off_diagonal)


def sturm_count(op: FDOperator1D, x: float) -> int:
    """Number of eigenvalues below x, from the signs of the LDL^T pivots of op - x"""

    d = op.diagonal - x
    e2 = op.off_diagonal**2
    tiny = np.finfo(float).eps * max(op.norm_bound, 1.0)

    count = 0
    pivot = d[0]

    for i in range(op.size):
        if i > 0:
            pivot = d[i] - e2[i - 1] / pivot

        if pivot == 0:
            pivot = -tiny

        if pivot < 0:
            count += 1

    return count


def _eigenvalues_by_index(
    op: FDOperator1D, first: int, last: int, tolerances: Tolerances
) -> np.ndarray:
    trace: List[str] = [f"bisection for indices {first}..{last} of {op.size}"]

    try:
        values = scipy.linalg.eigh_tridiagonal(
            op.diagonal,
            op.off_diagonal,
            eigvals_only=True,
            select="i",
            select_range=(first, last),
        )

    except (np.linalg.LinAlgError, ValueError) as e:
        trace.append(f"{e}: {traceback.format_exc()}")
        raise ConvergenceError(f"Eigenvalue extraction failed for ({op.alpha})", trace) from e

    if len(values) != last - first + 1 or not np.all(np.isfinite(values)):
        trace.append(f"returned {values}")
        raise ConvergenceError(f"Eigenvalue extraction failed for ({op.alpha})", trace)

    slack = tolerances.eigensolver * op.norm_bound
    below, above = sturm_count(op, values[0] - slack), sturm_count(op, values[-1] + slack)

    if below > first or above < last + 1:
        trace.append(f"sturm counts {below}, {above} around {values[0]!r}, {values[-1]!r}")
        raise ConvergenceError(f"Eigenvalues of ({op.alpha}) disagree with the Sturm count", trace)

    return np.asarray(values)


def smallest_eigs(
    op: FDOperator1D, count: int, tolerances: Optional[Tolerances] = None
) -> List[float]:
    tolerances = tolerances or default_tolerances()

    if count < 1:
        raise ContractViolation(f"count must be >= 1, got {count}")

    count = min(count, op.size)

    return [float(i) for i in _eigenvalues_by_index(op, 0, count - 1, tolerances)]


def min_singular_value(op: FDOperator1D, tolerances: Optional[Tolerances] = None) -> float:
    """Smallest |eigenvalue| of the symmetric operator, located by the Sturm count at 0"""

    tolerances = tolerances or default_tolerances()
    below = sturm_count(op, 0.0)

    first, last = max(below - 1, 0), min(below, op.size - 1)
    values = _eigenvalues_by_index(op, first, last, tolerances)

    return float(np.min(np.abs(values)))


def solve(
    op: FDOperator1D, rhs: Sequence[float], tolerances: Optional[Tolerances] = None
) -> np.ndarray:
    tolerances = tolerances or default_tolerances()
    rhs = np.asarray(rhs, dtype=float)

    if rhs.shape != (op.size,):
        raise ContractViolation(f"Right-hand side has shape {rhs.shape}, expected ({op.size},)")

    sigma = min_singular_value(op, tolerances)

    if sigma <= tolerances.eigensolver * op.norm_bound:
        raise WellPosednessError(
            f"Discrete operator for ({op.alpha}) is singular (min singular value {sigma:.3e})",
            "m(1/alpha) = 0 or beta at an eigenvalue",
        )

    try:
        u = scipy.linalg.solve_banded((1, 1), op.banded(), rhs)

    except np.linalg.LinAlgError as e:
        raise WellPosednessError(f"Discrete operator for ({op.alpha}) is singular: {e}") from e

    return u
