import logging
import os
from dataclasses import dataclass

from dotenv import dotenv_values, load_dotenv

from ..errors import ConfigurationError
from ..integrators import IntegratorId
from ..problems import ProblemKind, ProblemSpec

__all__ = ["HarnessConfig", "CaseConfig", "CASE_KEYS", "steps_for"]

CASE_KEYS = ("problem", "method", "dx", "dt", "t_end", "nu", "lambda", "rho", "x_tilde", "out")
REQUIRED_CASE_KEYS = ("problem", "method", "dx", "dt")

# Relative tolerance for a time step to count as dividing the end time.
STEP_TOLERANCE = 1e-9

DEFAULT_SAMPLE_EVERY = { ProblemKind.PURE_ADVECTION: 50,
                         ProblemKind.ADVECTION_DISPERSION: 10 }

def _env_int(name : str, default):
    value = os.environ.get(name)
    if value is None or value == "":
        return default
    try:
        return int(value)
    except ValueError:
        raise ConfigurationError(f"Environment variable {name} must be an integer, got '{value}'.") from None

class HarnessConfig:
    """Runtime settings of the harness, read from the environment and an optional .env file."""
    def __init__(self):
        self.log_level = logging.INFO
        self.workers = None
        self.stats_dir = None
        self.output_dir = "."
        self.sample_every = dict(DEFAULT_SAMPLE_EVERY)
        self.show_progress = True

    def load_config(self, dotenv_path : str = ".env"):
        load_dotenv(dotenv_path=dotenv_path)

        level_name = (os.environ.get('SINC_DQM_LOG_LEVEL') or 'INFO').upper()
        self.log_level = logging.getLevelName(level_name)
        if not isinstance(self.log_level, int):
            raise ConfigurationError(f"Unknown log level '{level_name}'.")
        self.workers = _env_int('SINC_DQM_WORKERS', None)
        if self.workers is not None and self.workers < 1:
            raise ConfigurationError(f"SINC_DQM_WORKERS must be at least 1, got {self.workers}.")
        self.stats_dir = os.environ.get('SINC_DQM_STATS_DIR') or None
        self.output_dir = os.environ.get('SINC_DQM_OUTPUT_DIR') or '.'
        self.sample_every = {
            ProblemKind.PURE_ADVECTION: _env_int('SINC_DQM_ADVECTION_SAMPLE_EVERY',
                                                 DEFAULT_SAMPLE_EVERY[ProblemKind.PURE_ADVECTION]),
            ProblemKind.ADVECTION_DISPERSION: _env_int('SINC_DQM_DISPERSION_SAMPLE_EVERY',
                                                       DEFAULT_SAMPLE_EVERY[ProblemKind.ADVECTION_DISPERSION]),
        }
        self.show_progress = (os.environ.get('SINC_DQM_PROGRESS') or '1') != '0'
        return self

def steps_for(t_end : float, dt : float) -> int:
    """Number of fixed steps of size dt reaching t_end. Rejects steps that do not divide t_end."""
    if not dt > 0:
        raise ConfigurationError(f"Time step must be positive, got {dt}.")
    n_steps = round(t_end / dt)
    if n_steps < 1 or abs(n_steps * dt - t_end) > STEP_TOLERANCE * t_end:
        raise ConfigurationError(f"Time step {dt} does not divide the end time {t_end}.")
    return n_steps

def _number(key : str, value) -> float:
    try:
        return float(value)
    except (TypeError, ValueError):
        raise ConfigurationError(f"Configuration key '{key}' must be a number, got '{value}'.") from None

@dataclass(frozen=True)
class CaseConfig:
    """One (problem, method, dx, dt) case with optional parameter overrides and output path."""
    problem : ProblemKind
    method : IntegratorId
    dx : float
    dt : float
    t_end : float = None
    nu : float = None
    lam : float = None
    rho : float = None
    x_tilde : float = None
    out : str = None

    def __post_init__(self):
        object.__setattr__(self, "problem", ProblemKind.parse(self.problem))
        object.__setattr__(self, "method", IntegratorId.parse(self.method))
        for key in ("dx", "dt"):
            if not getattr(self, key) > 0:
                raise ConfigurationError(f"Configuration key '{key}' must be positive, got {getattr(self, key)}.")

    @classmethod
    def from_mapping(cls, values) -> "CaseConfig":
        values = { str(key).strip().lower(): value for key, value in values.items() }
        unknown = sorted(set(values) - set(CASE_KEYS))
        if unknown:
            raise ConfigurationError(f"Unknown configuration keys: {', '.join(unknown)}.")
        missing = [key for key in REQUIRED_CASE_KEYS if values.get(key) in (None, "")]
        if missing:
            raise ConfigurationError(f"Missing configuration keys: {', '.join(missing)}.")

        options = { "problem": values["problem"], "method": values["method"] }
        for key in ("dx", "dt", "t_end", "nu", "lambda", "rho", "x_tilde"):
            if values.get(key) not in (None, ""):
                options["lam" if key == "lambda" else key] = _number(key, values[key])
        if values.get("out"):
            options["out"] = str(values["out"]).strip()
        return cls(**options)

    @classmethod
    def from_file(cls, path : str) -> "CaseConfig":
        """Reads a flat 'key = value' file with '#' comments."""
        if not os.path.isfile(path):
            raise ConfigurationError(f"Configuration file '{path}' does not exist.")
        return cls.from_mapping(dotenv_values(path))

    def problem_spec(self) -> ProblemSpec:
        return ProblemSpec.default(self.problem).with_overrides(nu=self.nu,
                                                                lam=self.lam,
                                                                rho=self.rho,
                                                                x_tilde=self.x_tilde,
                                                                t_end=self.t_end)

    @property
    def case_id(self) -> str:
        return f"{self.problem}-{self.method}-dx{self.dx:g}-dt{self.dt:g}"

    def describe(self) -> str:
        """Every configuration key with its effective value, as a single line."""
        problem = self.problem_spec()
        effective = { "problem": str(self.problem),
                      "method": str(self.method),
                      "dx": self.dx,
                      "dt": self.dt,
                      "t_end": problem.t_end,
                      "nu": problem.params.nu,
                      "lambda": problem.params.lam,
                      "rho": problem.rho,
                      "x_tilde": problem.x_tilde,
                      "out": self.out }
        return " ".join(f"{key}={'' if value is None else value}" for key, value in effective.items())
