from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional, Tuple

import numpy as np
import scipy.linalg
import scipy.sparse

from src.core.common_types import LaminateProfile
from src.core.errors import ProfileError


@dataclass(frozen=True, eq=False)
class FDOperator1D:
    """
    Flux-conservative discretisation of -(alpha u')' + beta u on n equal cells of
    (0, 1) with Dirichlet rows eliminated; acts on the n - 1 interior nodes.
    """

    alpha: LaminateProfile
    beta: Tuple[float, ...]
    n: int
    diagonal: np.ndarray
    off_diagonal: np.ndarray

    @property
    def size(self) -> int:
        return self.n - 1

    @property
    def dx(self) -> float:
        return 1.0 / self.n

    @property
    def nodes(self) -> np.ndarray:
        return np.arange(1, self.n) * self.dx

    @property
    def norm_bound(self) -> float:
        """Gershgorin bound on the spectral radius"""

        off = np.abs(self.off_diagonal)
        radius = np.abs(self.diagonal).copy()
        radius[:-1] += off
        radius[1:] += off

        return float(radius.max())

    def banded(self) -> np.ndarray:
        """(upper, diagonal, lower) rows in the layout of scipy.linalg.solve_banded"""

        ab = np.zeros((3, self.size))
        ab[0, 1:] = self.off_diagonal
        ab[1, :] = self.diagonal
        ab[2, :-1] = self.off_diagonal

        return ab

    def to_sparse(self) -> scipy.sparse.csr_matrix:
        return scipy.sparse.diags(
            [self.off_diagonal, self.diagonal, self.off_diagonal], [-1, 0, 1], format="csr"
        )

    def apply(self, u: np.ndarray) -> np.ndarray:
        return self.to_sparse() @ np.asarray(u, dtype=float)


class CoefficientKind(str, Enum):
    LAMINATE = "laminate"
    GAMMA = "gamma"


@dataclass(frozen=True)
class GalerkinCoefficient:
    """
    Conductivity diag(a_1, a_2, ..., a_2) with a_1, a_2 depending on x_1 only:
    a laminate alpha (a_1 = a_2 = alpha) or Gamma = diag(gamma, 1, ..., 1).
    """

    kind: CoefficientKind
    alpha: Optional[LaminateProfile] = None
    gamma: Optional[float] = None

    @classmethod
    def laminate(cls, alpha: LaminateProfile) -> "GalerkinCoefficient":
        return cls(CoefficientKind.LAMINATE, alpha=alpha)

    @classmethod
    def diagonal(cls, gamma: float) -> "GalerkinCoefficient":
        if not gamma > 0:
            raise ProfileError(f"gamma must be positive, got {gamma}")

        return cls(CoefficientKind.GAMMA, gamma=float(gamma))

    @property
    def longitudinal(self) -> LaminateProfile:
        if self.kind == CoefficientKind.LAMINATE:
            return self.alpha

        return LaminateProfile((self.gamma,))

    @property
    def transverse(self) -> LaminateProfile:
        if self.kind == CoefficientKind.LAMINATE:
            return self.alpha

        return LaminateProfile((1.0,))

    def __str__(self) -> str:
        if self.kind == CoefficientKind.LAMINATE:
            return f"laminate({self.alpha})"

        return f"gamma({self.gamma:g})"


@dataclass(frozen=True, eq=False)
class GalerkinProjection:
    """
    Matrix of <grad e_k / |grad e_k|, a grad e_l / |grad e_l|> over the sine basis
    e_k, k in {1..modes}^d, stored per transverse index (k_2, ..., k_d); each block
    couples k_1 = 1..modes.
    """

    coefficient: GalerkinCoefficient
    d: int
    modes: int
    blocks: Dict[Tuple[int, ...], np.ndarray] = field(default_factory=dict)

    @property
    def size(self) -> int:
        return self.modes**self.d

    def to_dense(self) -> np.ndarray:
        """Full matrix, basis ordered by (k_2, ..., k_d) first and k_1 within a block"""

        return scipy.linalg.block_diag(*(self.blocks[i] for i in sorted(self.blocks)))

    @property
    def asymmetry(self) -> float:
        return max(float(np.max(np.abs(i - i.T))) for i in self.blocks.values())


@dataclass(frozen=True)
class PollutionReport:
    modes: int
    step: int
    eigenvalues: Tuple[float, ...]
    stable: Tuple[float, ...]
    partner_tolerance: float
    note: str = "heuristic: eigenvalues without a partner in the larger section may be spectral pollution"

    @property
    def unstable(self) -> Tuple[float, ...]:
        stable = set(self.stable)

        return tuple(i for i in self.eigenvalues if i not in stable)

    def to_dict(self) -> dict:
        return {
            "modes": self.modes,
            "step": self.step,
            "eigenvalues": list(self.eigenvalues),
            "stable": list(self.stable),
            "partner_tolerance": self.partner_tolerance,
            "note": self.note,
        }
