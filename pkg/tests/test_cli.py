import json
import os

import pytest

from src.cli import Command, JobSpec, OutputFormat, build_parser, job_from_args, run
from src.core import ContractViolation, LaminateProfile
from src.oracle import load_triplets
from src.utils import Settings, load_report


def _report(capsys, argv):
    assert run(argv) == 0

    job, result = load_report(capsys.readouterr().out)

    return job, result


def test_spectrum1d_report(capsys):
    job, result = _report(capsys, ["spectrum1d", "--alpha", "1,-1"])

    assert job["command"] == "spectrum1d"
    assert result["values"] == [1.0, -1.0]
    assert result["mean_zero_roots"] == [pytest.approx(0.0, abs=1e-12)]


def test_homogenize_case_b(capsys):
    _, result = _report(capsys, ["homogenize", "--alpha", "1,-2,1", "--dim", "2", "--kmax", "3"])

    spectrum = result["spectrum"]

    assert result["limit"]["case"] == "fourth_order_b"
    assert result["limit"]["mean_inverse"] == pytest.approx(0.5)
    assert spectrum["generator"].startswith("2.0 *")
    assert spectrum["markers"] == ["0", "inf"]
    assert 2.0 in spectrum["points"]
    assert max(spectrum["points"]) == pytest.approx(18.0)


def test_homogenize_positive_profile_reports_convex_hull(capsys):
    _, result = _report(capsys, ["homogenize", "--alpha", "1,3", "--dim", "2", "--kmax", "3"])

    assert result["spectrum"]["case"] == "diagonal_c"
    assert result["convex_hull"]["inside"] is True


def test_gamma_identity(capsys):
    _, result = _report(capsys, ["gamma", "--gamma", "1", "--dim", "2"])

    assert result["spectrum"]["points"] == [1.0]


def test_wellposed(capsys):
    _, result = _report(capsys, ["wellposed", "--alpha", "1,2"])

    assert result["well_posed"] is True
    assert result["notes"] == []

    _, result = _report(capsys, ["wellposed", "--alpha", "1,-1"])

    assert result["well_posed"] is False
    assert "homogenize" in result["notes"][0]

    _, result = _report(capsys, ["wellposed", "--alpha", "1,2", "--dim", "2", "--kmax", "3"])

    assert result["dimension"] == 2
    assert result["well_posed"] is True
    assert result["criterion"]["satisfied"] is True

    _, result = _report(capsys, ["wellposed", "--alpha", "1,-1", "--dim", "2", "--kmax", "3"])

    assert result["well_posed"] is False
    assert result["notes"]


def test_spectrumdd_default_bound(capsys):
    job, result = _report(
        capsys,
        ["spectrumdd", "--alpha", "1,2", "--dim", "2", "--kmax", "3", "--s-resolution", "0.1"],
    )

    assert job["bound"] == pytest.approx(3.0)
    assert result["bound"] == pytest.approx(3.0)
    assert result["value_points"] == [1.0, 2.0]
    assert result["sequence"]["dim"] == 1


def test_scan_with_uniform_bound(capsys):
    _, result = _report(
        capsys, ["scan", "--alpha", "1,2", "--dim", "2", "--kmax", "4", "--uniform-bound", "10"]
    )

    assert result["criterion"]["satisfied"] is True
    assert result["uniform_bound"]["bound"] == 10.0
    assert [i["name"] for i in result["chain"]["steps"]][0] == "mean_inv_nonzero"


def test_oracle_fd_and_dump(capsys, tmp_path):
    path = str(tmp_path / "dump" / "fd.txt")
    _, result = _report(capsys, ["oracle", "--alpha", "1,-2,1", "--points", "30", "--dump", path])

    assert result["kind"] == "finite_difference"
    assert len(result["smallest_eigenvalues"]) == 5
    assert load_triplets(path).shape == (29, 29)


def test_oracle_galerkin(capsys):
    _, result = _report(
        capsys, ["oracle", "--gamma", "2", "--dim", "2", "--modes", "6", "--step", "2"]
    )

    assert result["kind"] == "galerkin"
    assert result["pollution"]["stable"] == result["pollution"]["eigenvalues"]


def test_json_is_byte_identical(tmp_path):
    first, second = str(tmp_path / "a.json"), str(tmp_path / "b.json")
    argv = ["homogenize", "--alpha", "1,-1,1", "--dim", "3", "--kmax", "3"]

    assert run(argv + ["--output", first]) == 0
    assert run(argv + ["--output", second]) == 0

    with open(first, "rb") as a, open(second, "rb") as b:
        assert a.read() == b.read()


def test_report_round_trip(capsys):
    assert run(["scan", "--alpha", "1,-3", "--dim", "2", "--kmax", "3", "--eps-p", "1e-8"]) == 0

    job, _ = load_report(capsys.readouterr().out)
    restored = JobSpec.from_dict(job)

    assert restored.command == Command.SCAN
    assert restored.alpha == LaminateProfile((1.0, -3.0))
    assert restored.tolerances.eps_p == 1e-8
    assert restored.to_dict() == job


@pytest.mark.parametrize(
    "argv, columns",
    [
        (["spectrum1d", "--alpha", "1,-1"], "kind,re,im"),
        (["gamma", "--gamma", "2", "--dim", "2", "--kmax", "2"], "kind,value"),
        (["wellposed", "--alpha", "1,2"], "dimension,well_posed,mean,mean_inverse"),
    ],
)
def test_csv_columns(capsys, argv, columns):
    assert run(argv + ["--format", "csv"]) == 0

    lines = capsys.readouterr().out.strip().splitlines()

    assert lines[0] == columns
    assert all(len(line.split(",")) == len(columns.split(",")) for line in lines)


def test_plotdata(capsys):
    assert run(["spectrum1d", "--alpha", "1,-1", "--format", "plotdata"]) == 0

    blocks = capsys.readouterr().out.strip().split("\n\n")

    assert blocks[0].startswith("# spectrum1d")
    assert blocks[1].splitlines() == ["# coefficient values", "1.0 0.0", "-1.0 0.0"]
    assert blocks[2].splitlines()[0] == "# mean-zero roots"


def test_plot(tmp_path):
    path = str(tmp_path / "homogenize.png")

    argv = ["homogenize", "--alpha", "1,-2,1", "--dim", "2", "--kmax", "3", "--plot", path]

    assert run(argv + ["--output", str(tmp_path / "report.json")]) == 0
    assert os.path.getsize(path) > 0


def test_config_document_and_flag_precedence(capsys, tmp_path):
    path = str(tmp_path / "job.json")

    with open(path, "w") as f:
        json.dump({"command": "gamma", "gamma": 4.0, "dim": 2, "kmax": 2}, f)

    _, result = _report(capsys, ["gamma", "--config", path])
    assert result["spectrum"]["points"] == pytest.approx([8 / 5, 5 / 2, 17 / 5])

    _, result = _report(capsys, ["gamma", "--config", path, "--kmax", "1"])
    assert result["spectrum"]["points"] == [2.5]


def test_settings_defaults_reach_the_job():
    args = build_parser().parse_args(["oracle", "--alpha", "1,2"])
    job = job_from_args(args, Settings().load())

    assert job.points == 1024
    assert job.modes == 20
    assert job.step == 5
    assert job.k_max == 10
    assert job.output_format == OutputFormat.JSON
    assert job.tolerances.eps_p == 1e-9


@pytest.mark.parametrize(
    "argv",
    [
        ["wellposed", "--alpha", "1,0"],
        ["spectrum1d", "--alpha", "1,x"],
        ["spectrum1d"],
        ["spectrumdd", "--alpha", "1,-1"],
        ["spectrumdd", "--alpha", "1,-1", "--dim", "2", "--bound", "0.5"],
        ["gamma", "--dim", "2"],
        ["gamma", "--gamma", "-1", "--dim", "2"],
        ["oracle", "--alpha", "1,-2,1", "--points", "100"],
        ["scan", "--alpha", "1,2", "--dim", "0"],
        ["homogenize", "--alpha", "1,2", "--config", "/nonexistent/job.json"],
    ],
)
def test_precondition_failures_exit_2(capsys, argv):
    assert run(argv) == 2
    assert "laminate_spectra" in capsys.readouterr().err


def test_zero_tolerance_reaches_profile_validation(capsys, tmp_path):
    argv = ["wellposed", "--alpha", "1,1e-13"]

    assert run(argv) == 2
    assert "vanishes" in capsys.readouterr().err

    _, result = _report(capsys, argv + ["--zero-tol", "1e-15"])
    assert result["dimension"] == 1

    path = str(tmp_path / "job.json")

    with open(path, "w") as f:
        json.dump({"alpha": [1.0, 1e-13], "tolerances": {"zero": 1e-15}}, f)

    job, _ = _report(capsys, ["wellposed", "--config", path])
    assert JobSpec.from_dict(job).alpha.values == (1.0, 1e-13)


def test_usage_errors():
    assert run([]) == 2
    assert run(["nonsense"]) == 2
    assert run(["spectrum1d", "--dim", "two"]) == 2
    assert run(["--help"]) == 0


def test_validation_rejects_non_positive_tolerances():
    args = build_parser().parse_args(["spectrum1d", "--alpha", "1,2", "--eps-p", "0"])

    with pytest.raises(ContractViolation):
        job_from_args(args, Settings().load())
