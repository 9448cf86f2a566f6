import numpy as np
import pytest

from sinc_dqm.grid import GridSpec

HARNESS_VARIABLES = ("SINC_DQM_LOG_LEVEL",
                     "SINC_DQM_WORKERS",
                     "SINC_DQM_STATS_DIR",
                     "SINC_DQM_OUTPUT_DIR",
                     "SINC_DQM_ADVECTION_SAMPLE_EVERY",
                     "SINC_DQM_DISPERSION_SAMPLE_EVERY",
                     "SINC_DQM_PROGRESS")

@pytest.fixture
def rng():
    return np.random.default_rng(20240611)

@pytest.fixture
def unit_grid():
    """Eleven nodes with unit spacing on [0, 10]."""
    return GridSpec(0.0, 10.0, 11)

@pytest.fixture
def clean_environment(monkeypatch, tmp_path):
    """Runs the test in an empty directory with none of the harness variables set.

    Every variable is set before being removed so that values loaded from a .env file are undone afterwards too.
    """
    for name in HARNESS_VARIABLES:
        monkeypatch.setenv(name, "")
        monkeypatch.delenv(name)
    monkeypatch.setenv("SINC_DQM_PROGRESS", "0")
    monkeypatch.chdir(tmp_path)
    return tmp_path

def write_case_file(path, **values):
    lines = ["# benchmark case"]
    lines += [f"{key} = {value}" for key, value in values.items()]
    path.write_text("\n".join(lines) + "\n")
    return path
