"""
Command-line front end.

    laminate_spectra.py <command> --alpha 1,-2,1 [--dim d] [--format json|csv|plotdata] ...

Defaults come from src/data/settings.json, a --config job document overrides
them and flags override the document. Exit status is 0 on success, 2 when a
precondition fails and 1 on an unexpected error.
"""


import argparse
import json
import logging
import os
import sys
import traceback
from typing import Any, Dict, List, Optional

from src.cli.common_types import Command, JobResult, JobSpec, OutputFormat
from src.cli.jobs import HANDLERS
from src.core.common_types import LaminateProfile
from src.core.errors import ContractViolation, LaminateError, ProfileError
from src.utils.logger import displace_message
from src.utils.plot import Plot
from src.utils.report import SCHEMA, render_csv, render_json, render_plotdata
from src.utils.settings import Settings, Tolerances

log = logging.getLogger("main.cli.main")

HELP = {
    Command.WELLPOSED: "decide well-posedness (d = 1 exactly, d >= 2 through the criterion)",
    Command.SPECTRUM1D: "inner spectrum of the 1-D operator",
    Command.SPECTRUMDD: "bounded part of the inner spectrum for d >= 2",
    Command.HOMOGENIZE: "homogenised limit and its inner spectrum",
    Command.GAMMA: "inner spectrum of the diagonal coefficient diag(gamma, 1, ..., 1)",
    Command.ORACLE: "finite-difference (d = 1) or Galerkin (d >= 2) cross-check",
    Command.SCAN: "criterion scan over the cross-section eigenvalues",
}

# flag destination -> tolerance field
TOLERANCE_FLAGS = {
    "zero_tol": "zero",
    "eps_p": "eps_p",
    "degeneracy_tol": "degeneracy",
    "eigensolver_tol": "eigensolver",
}


def _float_list(text: str) -> List[float]:
    try:
        return [float(i) for i in text.replace(" ", "").split(",") if i != ""]

    except ValueError as exc:
        message = f"not a comma separated list of numbers: {text!r}"
        raise argparse.ArgumentTypeError(message) from exc


def _common_arguments() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)

    job = parent.add_argument_group("job")
    job.add_argument(
        "--alpha",
        help="slab values, comma separated (use --alpha=-1,1 when the first value is negative)",
    )
    job.add_argument("--dim", type=int, help="total dimension d of the laminated domain")
    job.add_argument("--kmax", type=int, dest="k_max", help="modes per cross-section direction")
    job.add_argument("--bound", type=float, help="spectral bound A for spectrumdd")
    job.add_argument("--gamma", type=float, help="gamma > 0 of the diagonal coefficient")
    job.add_argument("--beta", type=_float_list, help="zeroth-order slab values for the 1-D oracle")
    job.add_argument("--points", type=int, help="finite-difference cells")
    job.add_argument("--modes", type=int, help="Galerkin modes per direction")
    job.add_argument("--step", type=int, help="section increase for the pollution filter")
    job.add_argument("--uniform-bound", type=float, dest="uniform_bound", help="resolvent bound C")
    job.add_argument("--delta-grid", type=_float_list, dest="delta_grid", help="criterion shifts")
    job.add_argument("--s-resolution", type=float, dest="s_resolution", help="shift scan step")
    job.add_argument("--config", help="JSON job document with the same keys as the flags")

    tolerances = parent.add_argument_group("tolerances")
    tolerances.add_argument("--zero-tol", type=float, dest="zero_tol", help="default 1e-12")
    tolerances.add_argument("--eps-p", type=float, dest="eps_p", help="default 1e-9")
    tolerances.add_argument(
        "--degeneracy-tol", type=float, dest="degeneracy_tol", help="default 1e-12"
    )
    tolerances.add_argument(
        "--eigensolver-tol", type=float, dest="eigensolver_tol", help="default 1e-12"
    )

    output = parent.add_argument_group("output")
    output.add_argument("--format", choices=[i.value for i in OutputFormat], dest="output_format")
    output.add_argument("--output", help="report path (stdout when omitted)")
    output.add_argument("--plot", help="render the point families to an image")
    output.add_argument("--dump", help="write the oracle matrix as sparse triplets")

    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="laminate_spectra",
        description="Spectral analysis of laminated sign-changing divergence-form operators",
    )
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="command")
    parent = _common_arguments()

    for command in Command:
        subparsers.add_parser(command.value, parents=[parent], help=HELP[command])

    return parser


def _read_config(path: str) -> Dict[str, Any]:
    try:
        with open(path, "r") as f:
            document = json.load(f)

    except (OSError, json.JSONDecodeError) as exc:
        raise ContractViolation(f"Can not read job document {path}: {exc}") from exc

    if not isinstance(document, dict):
        raise ContractViolation(f"Job document {path} must be a JSON object")

    return document


def _profile(value: Any, zero: float) -> Optional[LaminateProfile]:
    if value is None:
        return None

    if isinstance(value, str):
        return LaminateProfile.parse(value, zero)

    if isinstance(value, (list, tuple)):
        return LaminateProfile.from_values(value, zero)

    raise ProfileError(f"Can not read coefficient profile from {value!r}")


def _sequence(value: Any) -> Optional[tuple]:
    if value is None:
        return None

    if isinstance(value, str):
        return tuple(_float_list(value))

    return tuple(float(i) for i in value)


def _optional_float(value: Any) -> Optional[float]:
    return None if value is None else float(value)


def job_from_args(args: argparse.Namespace, settings: dict) -> JobSpec:
    """settings.json < --config document < flags"""

    scan, oracle = settings.get("scan", {}), settings.get("oracle", {})

    merged: Dict[str, Any] = {
        "dim": 1,
        "k_max": scan.get("k_max", 10),
        "points": oracle.get("fd_points", 1024),
        "modes": oracle.get("galerkin_modes", 20),
        "step": oracle.get("pollution_step", 5),
        "delta_grid": scan.get("delta_grid", [1e-3, 1e-2, 1e-1]),
        "s_resolution": scan.get("s_resolution"),
        "output_format": settings.get("report", {}).get("format", OutputFormat.JSON.value),
    }

    if args.config:
        document = _read_config(args.config)
        aliases = {"kmax": "k_max", "format": "output_format", "delta": "delta_grid"}
        merged.update({aliases.get(k, k): v for k, v in document.items()})

    merged.update({k: v for k, v in vars(args).items() if v is not None and k != "config"})

    base = Tolerances.from_settings(settings)

    if isinstance(merged.get("tolerances"), dict):
        base = base.replace(**merged["tolerances"])

    tolerances = base.replace(
        **{field: merged.get(flag) for flag, field in TOLERANCE_FLAGS.items()}
    )

    alpha = _profile(merged.get("alpha"), tolerances.zero)
    dim = int(merged["dim"])
    command = Command(merged["command"])
    bound = merged.get("bound")

    if command == Command.SPECTRUMDD and bound is None and alpha is not None:
        bound = alpha.sup_norm * (1.0 + float(scan.get("bound_margin", 0.5)))

    job = JobSpec(
        command=command,
        alpha=alpha,
        dim=dim,
        k_max=int(merged["k_max"]),
        bound=_optional_float(bound),
        gamma=_optional_float(merged.get("gamma")),
        beta=_sequence(merged.get("beta")),
        points=int(merged["points"]),
        modes=int(merged["modes"]),
        step=int(merged["step"]),
        uniform_bound=_optional_float(merged.get("uniform_bound")),
        delta_grid=_sequence(merged["delta_grid"]),
        s_resolution=_optional_float(merged.get("s_resolution")),
        tolerances=tolerances,
        output_format=OutputFormat(merged["output_format"]),
        output=merged.get("output"),
        plot=merged.get("plot"),
        dump=merged.get("dump"),
    )
    validate(job)

    return job


def validate(job: JobSpec) -> None:
    if job.dim < 1:
        raise ContractViolation(f"--dim must be >= 1, got {job.dim}")

    if job.k_max < 1:
        raise ContractViolation(f"--kmax must be >= 1, got {job.k_max}")

    if job.points < 2 or job.modes < 1 or job.step < 1:
        raise ContractViolation("--points must be >= 2, --modes and --step >= 1")

    if job.bound is not None and job.bound <= 0:
        raise ContractViolation(f"--bound must be positive, got {job.bound}")

    if job.uniform_bound is not None and job.uniform_bound <= 0:
        raise ContractViolation(f"--uniform-bound must be positive, got {job.uniform_bound}")

    if job.s_resolution is not None and job.s_resolution <= 0:
        raise ContractViolation(f"--s-resolution must be positive, got {job.s_resolution}")

    if any(value <= 0 for value in vars(job.tolerances).values()):
        raise ContractViolation("tolerances must be positive")


def render(job: JobSpec, result: JobResult, schema: str = SCHEMA) -> str:
    if job.output_format == OutputFormat.CSV:
        return render_csv(result.rows, result.columns)

    if job.output_format == OutputFormat.PLOTDATA:
        return render_plotdata(result.families, title=_title(job))

    return render_json(job.to_dict(), result.body, schema)


def _title(job: JobSpec) -> str:
    subject = f"gamma = {job.gamma:g}" if job.alpha is None else f"alpha = ({job.alpha})"

    return f"{job.command.value}: {subject}, d = {job.dim}"


def _write(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
        return

    directory = os.path.dirname(path)

    if directory:
        os.makedirs(directory, exist_ok=True)

    with open(path, "w") as f:
        f.write(text)

    log.info(f"Report written to {path}")


def execute(job: JobSpec, schema: str = SCHEMA) -> str:
    log.info(
        displace_message(
            (12, 24, 8, 10),
            (
                job.command.value,
                str(job.alpha or job.gamma),
                f"d={job.dim}",
                job.output_format.value,
            ),
        )
    )

    result = HANDLERS[job.command](job)
    text = render(job, result, schema)
    _write(text, job.output)

    if job.plot:
        plot = Plot(result.families, _title(job))
        plot.add_vertical_lines(result.markers)
        plot.save(job.plot)

    return text


def run(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)

    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    try:
        settings = Settings().load()
        job = job_from_args(args, settings)
        execute(job, settings.get("report", {}).get("schema", SCHEMA))

        return 0

    except LaminateError as e:
        log.warning(f"{type(e).__name__}: {e}")
        sys.stderr.write(f"laminate_spectra {args.command}: {type(e).__name__}: {e}\n")

        return 2

    except Exception as e:
        log.error(f">>> {e}: {traceback.format_exc()}")
        sys.stderr.write(f"laminate_spectra {args.command}: unexpected failure: {e}\n")

        return 1
