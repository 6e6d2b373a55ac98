"""
Fourier-Galerkin finite sections of a conductivity compressed to gradients of
H_0^1((0, 1)^d).

With e_k = 2^(d/2) prod_m sin(k_m pi x_m) and a coefficient diag(a_1, a_2, ..., a_2)
depending on x_1 only,

    <grad e_k, a grad e_l> / (pi^2 |k| |l|)
        = [k_1 l_1 C_{a_1}(k_1, l_1) + |k'|^2 S_{a_2}(k_1, l_1)] / (|k| |l|)  if k' = l'

and 0 otherwise, where k' = (k_2, ..., k_d) and C, S are the cosine and sine
Gram integrals 2 int_0^1 a cos cos and 2 int_0^1 a sin sin, evaluated slab by slab.
"""


import itertools
import logging
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from src.core.common_types import LaminateProfile
from src.core.errors import ContractViolation
from src.oracle.common_types import GalerkinCoefficient, GalerkinProjection, PollutionReport
from src.utils.settings import Tolerances, default_tolerances

log = logging.getLogger("main.oracle.galerkin")

LARGE_SECTION = 40


def cosine_moments(a: LaminateProfile, n: np.ndarray) -> np.ndarray:
    """int_0^1 a(x) cos(n pi x) dx for integer n >= 0"""

    n = np.asarray(n)
    edges = np.arange(a.slabs + 1) * a.h
    values = np.empty(n.shape, dtype=float)

    zero = n == 0
    values[zero] = float(np.mean(a.array))

    k = n[~zero][:, None] * np.pi
    jumps = np.sin(k * edges[1:]) - np.sin(k * edges[:-1])
    values[~zero] = (jumps @ a.array) / k[:, 0]

    return values


def gram_blocks(a: LaminateProfile, modes: int) -> Tuple[np.ndarray, np.ndarray]:
    """C and S over k_1, l_1 in 1..modes"""

    k = np.arange(1, modes + 1)
    difference = np.abs(k[:, None] - k[None, :])
    total = k[:, None] + k[None, :]

    moments = cosine_moments(a, np.arange(2 * modes + 1))

    return moments[difference] + moments[total], moments[difference] - moments[total]


def assemble_galerkin(coefficient: GalerkinCoefficient, d: int, modes: int) -> GalerkinProjection:
    if d not in (2, 3):
        raise ContractViolation(f"Galerkin sections are built for d in (2, 3), got {d}")

    if modes < 1:
        raise ContractViolation(f"modes must be >= 1, got {modes}")

    if modes > LARGE_SECTION:
        log.warning(f"{coefficient}: section with {modes} modes per axis has size {modes**d}")

    k1 = np.arange(1, modes + 1, dtype=float)
    cosine, _ = gram_blocks(coefficient.longitudinal, modes)
    _, sine = gram_blocks(coefficient.transverse, modes)

    by_norm: Dict[int, np.ndarray] = {}
    blocks: Dict[Tuple[int, ...], np.ndarray] = {}

    for transverse in itertools.product(range(1, modes + 1), repeat=d - 1):
        q = sum(i**2 for i in transverse)

        if q not in by_norm:
            norms = np.sqrt(k1**2 + q)
            block = (np.outer(k1, k1) * cosine + q * sine) / np.outer(norms, norms)
            by_norm[q] = (block + block.T) / 2.0

        blocks[transverse] = by_norm[q]

    log.debug(f"{coefficient}: {len(blocks)} blocks of size {modes}, {len(by_norm)} distinct")

    return GalerkinProjection(coefficient, d, modes, blocks)


def galerkin_spectrum(g: GalerkinProjection) -> List[float]:
    eigenvalues = {q: np.linalg.eigvalsh(block) for q, block in _distinct_blocks(g)}
    values = np.concatenate([eigenvalues[_norm(i)] for i in g.blocks])

    return [float(i) for i in np.sort(values)]


def _norm(transverse: Tuple[int, ...]) -> int:
    return sum(i**2 for i in transverse)


def _distinct_blocks(g: GalerkinProjection) -> Iterator[Tuple[int, np.ndarray]]:
    seen = set()

    for transverse, block in g.blocks.items():
        q = _norm(transverse)

        if q not in seen:
            seen.add(q)
            yield q, block


def stable_eigenvalues(
    coefficient: GalerkinCoefficient,
    d: int,
    modes: int,
    step: int = 5,
    partner_tolerance: float = 1e-6,
    tolerances: Optional[Tolerances] = None,
) -> PollutionReport:
    """
    Eigenvalues of the modes-section that reappear, within partner_tolerance
    (relative above 1), in the (modes + step)-section.
    """

    tolerances = tolerances or default_tolerances()

    if step < 1:
        raise ContractViolation(f"step must be >= 1, got {step}")

    small = np.asarray(galerkin_spectrum(assemble_galerkin(coefficient, d, modes)))
    large = np.asarray(galerkin_spectrum(assemble_galerkin(coefficient, d, modes + step)))

    slack = np.maximum(partner_tolerance * np.maximum(1.0, np.abs(small)), tolerances.eigensolver)
    index = np.clip(np.searchsorted(large, small), 1, len(large) - 1)
    nearest = np.minimum(np.abs(large[index - 1] - small), np.abs(large[index] - small))

    stable = small[nearest <= slack]

    log.info(
        f"{coefficient}: {len(stable)} of {len(small)} eigenvalues stable "
        f"from {modes} to {modes + step} modes"
    )

    return PollutionReport(
        modes=modes,
        step=step,
        eigenvalues=tuple(float(i) for i in small),
        stable=tuple(float(i) for i in stable),
        partner_tolerance=partner_tolerance,
    )
