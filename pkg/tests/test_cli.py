import pandas as pd
import pytest

from sinc_dqm.harness.cli import main

from .conftest import write_case_file

def test_solve_writes_the_solution(clean_environment, capsys):
    case = write_case_file(clean_environment / "fadeout.conf",
                           problem="fadeout",
                           method="rk4",
                           dx=0.2,
                           dt=0.0125,
                           out="fadeout.csv")
    assert main(["solve", "--config", str(case)]) == 0

    output = capsys.readouterr().out
    assert "status: completed" in output
    assert "steps: 400 / 400" in output
    assert (clean_environment / "fadeout.csv").exists()
    errors = pd.read_csv(clean_environment / "fadeout_errors.csv", comment="#")
    assert len(errors) == 41

def test_solve_sampling_interval_override(clean_environment):
    case = write_case_file(clean_environment / "fadeout.conf",
                           problem="fadeout",
                           method="heun",
                           dx=0.2,
                           dt=0.0125,
                           out="heun.csv")
    assert main(["solve", "--config", str(case), "--sample-every", "100"]) == 0
    errors = pd.read_csv(clean_environment / "heun_errors.csv", comment="#")
    assert list(errors["t"]) == pytest.approx([0.0, 1.25, 2.5, 3.75, 5.0])

def test_solve_reports_divergence(clean_environment, capsys):
    case = write_case_file(clean_environment / "fore.conf", problem="pure_advection", method="FORE", dx=50, dt=50)
    assert main(["solve", "--config", str(case)]) == 1
    assert "status: diverged" in capsys.readouterr().out

@pytest.mark.parametrize("argv", [["solve", "--config", "absent.conf"],
                                  ["--log-level", "chatty", "solve", "--config", "absent.conf"],
                                  ["--workers", "0", "solve", "--config", "absent.conf"],
                                  ["convergence", "--problem", "fadeout", "--method", "rk4",
                                   "--dx-list", "0.4", "--dt-list", "0.0125"]])
def test_configuration_errors_exit_with_two(clean_environment, argv):
    assert main(argv) == 2

def test_invalid_case_file_exits_with_two(clean_environment):
    case = write_case_file(clean_environment / "bad.conf", problem="fadeout", method="rb34", dx=0.2, dt=0.0125)
    assert main(["solve", "--config", str(case)]) == 2

def test_unknown_table_is_a_usage_error(clean_environment):
    with pytest.raises(SystemExit) as error:
        main(["table", "--id", "3"])
    assert error.value.code == 2

def test_convergence_writes_the_error_grid(clean_environment, monkeypatch, capsys):
    monkeypatch.setenv("SINC_DQM_OUTPUT_DIR", "results")
    argv = ["--workers", "2", "convergence", "--problem", "fadeout", "--method", "rk4",
            "--dx-list", "0.2", "0.1", "--dt-list", "0.0125", "0.025"]
    assert main(argv) == 0

    output = capsys.readouterr().out
    assert "observed spatial order" in output
    frame = pd.read_csv(clean_environment / "results" / "convergence_advection_dispersion_RK4.csv")
    assert list(frame.columns) == ["dx", "dt", "linf"]
    assert len(frame) == 4
