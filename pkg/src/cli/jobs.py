"""
One handler per CLI command: run the analysis for a JobSpec and shape the
result into a report body, csv rows and plottable point families.
"""


import logging
from typing import Callable, Dict, Iterable, List, Tuple

import numpy as np

from src.cli.common_types import Command, JobResult, JobSpec
from src.core.characteristic import chi
from src.core.common_types import LaminateProfile
from src.core.errors import ContractViolation, WellPosednessError
from src.homogenisation.limits import (
    convex_hull_check,
    gamma_inner_spectrum,
    limit_coefficient,
    limit_inner_spectrum,
)
from src.multi_dim.common_types import DiscreteSequence
from src.multi_dim.criterion import (
    criterion_chain,
    dirichlet_eigenvalues,
    positive_roots,
    qcrit_check,
    uniform_bound_check,
    well_posed_dd,
)
from src.multi_dim.scan import inner_spectrum_dd
from src.one_dim.analysis import (
    DEGENERATE_POINTER,
    inner_spectrum_1d,
    is_well_posed_1d,
    mean,
    mean_inv,
)
from src.oracle.common_types import GalerkinCoefficient
from src.oracle.fd import assemble_fd_1d, min_singular_value, smallest_eigs
from src.oracle.galerkin import assemble_galerkin, stable_eigenvalues
from src.oracle.triplets import dump_triplets

log = logging.getLogger("main.cli.jobs")

SMALLEST_EIGENVALUES = 5


def _alpha(job: JobSpec) -> LaminateProfile:
    if job.alpha is None:
        raise ContractViolation(f"{job.command.value} needs a coefficient profile (--alpha)")

    return job.alpha


def _cross_section(job: JobSpec) -> DiscreteSequence:
    """Dirichlet eigenvalues of the cross-section (0, 1)^(d - 1)"""

    if job.dim < 2:
        raise ContractViolation(f"{job.command.value} needs --dim >= 2, got {job.dim}")

    return dirichlet_eigenvalues(job.dim - 1, job.k_max)


def _on_axis(values: Iterable[float]) -> List[Tuple[float, float]]:
    return [(float(i), 0.0) for i in values]


def _in_plane(values: Iterable[complex]) -> List[Tuple[float, float]]:
    return [(complex(i).real, complex(i).imag) for i in values]


def wellposed(job: JobSpec) -> JobResult:
    alpha = _alpha(job)
    tolerances = job.tolerances

    if job.dim == 1:
        well_posed = is_well_posed_1d(alpha, tolerances)
        body = {
            "dimension": 1,
            "well_posed": well_posed,
            "mean": mean(alpha),
            "mean_inverse": mean_inv(alpha),
            "notes": [] if well_posed else [DEGENERATE_POINTER],
        }

        return JobResult(
            body=body,
            columns=("dimension", "well_posed", "mean", "mean_inverse"),
            rows=[body],
            families={"coefficient values": _on_axis(alpha.values)},
        )

    seq = _cross_section(job)
    criterion = qcrit_check(alpha, seq, job.delta_grid, tolerances)
    notes: List[str] = []

    try:
        well_posed = well_posed_dd(alpha, seq, tolerances)

    except WellPosednessError as e:
        well_posed = False
        notes.append(str(e))

    roots = positive_roots(alpha)
    body = {
        "dimension": job.dim,
        "well_posed": well_posed,
        "criterion": criterion,
        "chain": criterion_chain(alpha, seq, tolerances),
        "positive_roots": roots,
        "chi": chi(alpha),
        "sequence": seq,
        "notes": notes + list(criterion.notes),
    }

    return JobResult(
        body=body,
        columns=("dimension", "well_posed", "criterion_satisfied", "delta0", "chi", "mu_star"),
        rows=[
            {
                "dimension": job.dim,
                "well_posed": well_posed,
                "criterion_satisfied": criterion.satisfied,
                "delta0": criterion.delta0,
                "chi": chi(alpha),
                "mu_star": criterion.mu_star,
            }
        ],
        families={"roots of p_alpha in (0, 1]": _on_axis(roots)},
        markers=[(float(np.tanh(np.sqrt(seq.minimum) * alpha.h)), "grey")],
    )


def spectrum1d(job: JobSpec) -> JobResult:
    alpha = _alpha(job)
    report = inner_spectrum_1d(alpha, job.tolerances)

    rows = [{"kind": "value", "re": v, "im": 0.0} for v in report.value_points]
    rows += [
        {"kind": "mean_zero_root", "re": complex(z).real, "im": complex(z).imag}
        for z in report.mean_zero_roots
    ]

    return JobResult(
        body=report.to_dict(),
        columns=("kind", "re", "im"),
        rows=rows,
        families={
            "coefficient values": _on_axis(report.value_points),
            "mean-zero roots": _in_plane(report.mean_zero_roots),
        },
    )


def spectrumdd(job: JobSpec) -> JobResult:
    alpha = _alpha(job)
    seq = _cross_section(job)

    if job.bound is None:
        raise ContractViolation("spectrumdd needs a spectral bound (--bound)")

    report = inner_spectrum_dd(alpha, seq, job.bound, job.s_resolution, job.tolerances)

    rows = [{"kind": "value", "s": v, "t": None, "k": None} for v in report.value_points]
    rows += [{"kind": "scan_root", "s": i.s, "t": i.t, "k": i.k} for i in report.scan_roots]
    rows += [
        {"kind": "mean_zero_shift", "s": s, "t": None, "k": None} for s in report.mean_zero_shifts
    ]

    body = report.to_dict()
    body["sequence"] = seq

    return JobResult(
        body=body,
        columns=("kind", "s", "t", "k"),
        rows=rows,
        families={
            "coefficient values": _on_axis(report.value_points),
            "scan roots (s, t)": [(i.s, i.t) for i in report.scan_roots],
            "mean-zero shifts": _on_axis(report.mean_zero_shifts),
        },
        markers=[(-job.bound, "grey"), (job.bound, "grey")],
    )


def _spectrum_rows(points: Iterable[float], multipliers: Iterable[float]) -> List[dict]:
    rows = [{"kind": "point", "value": p} for p in points]
    rows += [{"kind": "multiplier", "value": m} for m in multipliers]

    return rows


def homogenize(job: JobSpec) -> JobResult:
    alpha = _alpha(job)

    limit = limit_coefficient(alpha, job.dim, job.tolerances)
    spectrum = limit_inner_spectrum(alpha, job.dim, job.k_max, job.tolerances)
    body = {"limit": limit, "spectrum": spectrum}

    if all(v > 0 for v in alpha.values):
        body["convex_hull"] = convex_hull_check(alpha, job.dim, job.k_max, job.tolerances)

    log.info(f"({alpha}), d = {job.dim}: {limit.case.value}, {spectrum.kind.value}")

    return JobResult(
        body=body,
        columns=("kind", "value"),
        rows=_spectrum_rows(spectrum.points, spectrum.multipliers),
        families={"limit inner spectrum": _on_axis(spectrum.points)},
        markers=[(0.0, "grey")] if "0" in spectrum.markers else [],
    )


def gamma(job: JobSpec) -> JobResult:
    if job.gamma is None:
        raise ContractViolation("gamma needs --gamma")

    spectrum = gamma_inner_spectrum(job.gamma, job.dim, job.k_max)

    return JobResult(
        body={"spectrum": spectrum},
        columns=("kind", "value"),
        rows=_spectrum_rows(spectrum.points, ()),
        families={"inner spectrum of Gamma": _on_axis(spectrum.points)},
        markers=[(min(job.gamma, 1.0), "grey"), (max(job.gamma, 1.0), "grey")],
    )


def oracle(job: JobSpec) -> JobResult:
    if job.dim == 1:
        alpha = _alpha(job)
        op = assemble_fd_1d(alpha, job.beta, job.points)
        eigenvalues = smallest_eigs(op, SMALLEST_EIGENVALUES, job.tolerances)

        if job.dump:
            dump_triplets(op.to_sparse(), job.dump)

        body = {
            "kind": "finite_difference",
            "cells": job.points,
            "min_singular_value": min_singular_value(op, job.tolerances),
            "smallest_eigenvalues": eigenvalues,
            "well_posed_1d": is_well_posed_1d(alpha, job.tolerances) if job.beta is None else None,
        }

        return JobResult(
            body=body,
            columns=("kind", "value"),
            rows=[{"kind": "eigenvalue", "value": v} for v in eigenvalues],
            families={"smallest eigenvalues": _on_axis(eigenvalues)},
        )

    if job.gamma is not None:
        coefficient = GalerkinCoefficient.diagonal(job.gamma)
    else:
        coefficient = GalerkinCoefficient.laminate(_alpha(job))

    report = stable_eigenvalues(
        coefficient, job.dim, job.modes, job.step, tolerances=job.tolerances
    )

    if job.dump:
        dump_triplets(assemble_galerkin(coefficient, job.dim, job.modes).to_dense(), job.dump)

    stable = set(report.stable)

    return JobResult(
        body={"kind": "galerkin", "coefficient": str(coefficient), "pollution": report},
        columns=("kind", "value"),
        rows=[
            {"kind": "stable" if v in stable else "unstable", "value": v}
            for v in report.eigenvalues
        ],
        families={
            "stable eigenvalues": _on_axis(report.stable),
            "possibly polluted": _on_axis(report.unstable),
        },
    )


def scan(job: JobSpec) -> JobResult:
    alpha = _alpha(job)
    seq = _cross_section(job)

    criterion = qcrit_check(alpha, seq, job.delta_grid, job.tolerances)
    uniform = None

    if job.uniform_bound is not None:
        uniform = uniform_bound_check(alpha, seq, job.uniform_bound, tolerances=job.tolerances)

    witness = criterion.witness

    return JobResult(
        body={
            "criterion": criterion,
            "chain": criterion_chain(alpha, seq, job.tolerances),
            "uniform_bound": uniform,
            "sequence": seq,
        },
        columns=(
            "satisfied",
            "delta0",
            "k_checked",
            "k_certified",
            "mu_star",
            "witness_k",
            "witness_d",
        ),
        rows=[
            {
                "satisfied": criterion.satisfied,
                "delta0": criterion.delta0,
                "k_checked": criterion.k_checked,
                "k_certified": criterion.k_certified,
                "mu_star": criterion.mu_star,
                "witness_k": None if witness is None else witness.k,
                "witness_d": None if witness is None else witness.d,
            }
        ],
        families={"witness (lambda_k, d)": [] if witness is None else [(witness.lam, witness.d)]},
    )


HANDLERS: Dict[Command, Callable[[JobSpec], JobResult]] = {
    Command.WELLPOSED: wellposed,
    Command.SPECTRUM1D: spectrum1d,
    Command.SPECTRUMDD: spectrumdd,
    Command.HOMOGENIZE: homogenize,
    Command.GAMMA: gamma,
    Command.ORACLE: oracle,
    Command.SCAN: scan,
}
