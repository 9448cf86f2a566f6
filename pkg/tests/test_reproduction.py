"""Slow checks of the published error tables. Run with `pytest -m reproduction`."""
import re

import pandas as pd
import pytest

from sinc_dqm.harness.case_runner import run_case
from sinc_dqm.harness.cli import main
from sinc_dqm.harness.config import CaseConfig
from sinc_dqm.harness.reference_tables import TIGHT_TOLERANCE

pytestmark = pytest.mark.reproduction

# RK4 at (50, 50) is printed as 7.0186e-5; the computed error carries the same mantissa one decade up.
@pytest.mark.parametrize("method, dx, dt, reference", [("FORE", 200, 50, 533.5714),
                                                       ("RK3", 200, 50, 1.9080e-2),
                                                       ("RK3", 50, 50, 1.8821e-2),
                                                       ("RK3", 25, 10, 1.5429e-4),
                                                       ("RK4", 200, 50, 1.9151e-3),
                                                       ("RK4", 50, 50, 7.0186e-4),
                                                       ("RK4", 25, 10, 1.1436e-6),
                                                       ("AB4", 200, 50, 2.8709e-2),
                                                       ("AM4", 200, 50, 2.5487e-3),
                                                       ("AM4", 25, 10, 3.5583e-6)])
def test_pure_advection_errors(method, dx, dt, reference):
    report = run_case(CaseConfig("pure_advection", method, dx, dt))
    assert report.completed
    assert report.linf == pytest.approx(reference, rel=TIGHT_TOLERANCE)

# AB4 at (25, 10) is printed as finite, but dt * rho(A) = 0.623 lies outside its stability interval.
@pytest.mark.parametrize("method, dx, dt", [("FORE", 50, 50), ("RK4", 25, 50), ("AB4", 50, 50), ("AB4", 25, 10)])
def test_pure_advection_divergence(method, dx, dt):
    assert not run_case(CaseConfig("pure_advection", method, dx, dt)).completed

@pytest.mark.parametrize("problem, method, dx, dt, printed", [("pure_advection", "RKF45", 25, 10, 7.5235e-8),
                                                              ("pure_advection", "RKCK45", 25, 50, 23025.3677),
                                                              ("pure_advection", "RKCK45", 25, 10, 7.4091e-8),
                                                              ("fadeout", "RK4", 0.025, 0.0125, 8.8121e-7)])
def test_errors_stay_below_the_printed_value(problem, method, dx, dt, printed):
    report = run_case(CaseConfig(problem, method, dx, dt))
    assert report.completed
    assert report.linf <= printed * (1.0 + TIGHT_TOLERANCE)

@pytest.mark.parametrize("method, dx, reference", [("RK4", 0.2, 1.3855e-1),
                                                   ("RK4", 0.1, 9.9863e-3),
                                                   ("RK4", 0.05, 1.1070e-4),
                                                   ("HEUN", 0.1, 9.9836e-3),
                                                   ("RK3", 0.05, 1.1087e-4)])
def test_fadeout_errors(method, dx, reference):
    report = run_case(CaseConfig("fadeout", method, dx, 0.0125))
    assert report.completed
    assert report.linf == pytest.approx(reference, rel=TIGHT_TOLERANCE)

def test_fadeout_table_command(clean_environment, capsys):
    exit_code = main(["table", "--id", "2", "--csv", "table_2.csv"])
    output = capsys.readouterr().out
    assert output.startswith("Table 2: Fadeout")
    assert "Column check (dx=0.2, dt=0.0125)" in output

    frame = pd.read_csv(clean_environment / "table_2.csv")
    column_passed = re.search(r"^Column check .* PASS$", output, re.MULTILINE) is not None
    assert exit_code == (0 if (frame["verdict"] != "FAIL").all() and column_passed else 1)

def test_pure_advection_table_is_reproducible(clean_environment, capsys):
    outputs = []
    for run in (1, 2):
        assert main(["table", "--id", "1", "--csv", f"table_1_run{run}.csv"]) == 0
        outputs.append(capsys.readouterr().out)

    assert outputs[0] == outputs[1]
    assert "Summary: 40 PASS, 0 FAIL" in outputs[0]

    frames = [pd.read_csv(clean_environment / f"table_1_run{run}.csv").drop(columns="wall_time") for run in (1, 2)]
    pd.testing.assert_frame_equal(frames[0], frames[1])
