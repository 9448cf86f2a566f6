import logging
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
import pandas as pd

from ..ade import assemble
from ..grid import GridSpec
from ..integrators import SolveStatus, integrate
from ..metrics import ErrorSample, linf_error
from ..problems import ProblemSpec, boundary_values, initial_condition
from .config import DEFAULT_SAMPLE_EVERY, CaseConfig, steps_for

__all__ = ["CaseSolution", "CaseReport", "run_case", "emit_solution_csv"]

# Significant digits that round-trip a float64.
CSV_FLOAT_FORMAT = "%.17g"

@dataclass
class CaseSolution:
    """Numerical and exact nodal profiles at the end time."""
    t : float
    x : np.ndarray
    numeric : np.ndarray
    exact : np.ndarray

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({ "x": self.x,
                              "u_numeric": self.numeric,
                              "u_exact": self.exact,
                              "abs_error": np.abs(self.numeric - self.exact) })

@dataclass
class CaseReport:
    config : CaseConfig
    problem : ProblemSpec
    grid : GridSpec
    n_steps : int
    status : SolveStatus
    steps_taken : int
    wall_time : float
    final_error : ErrorSample = None
    diverged_at_step : int = None
    error_series : list = field(default_factory=list)
    solution : CaseSolution = None

    @property
    def completed(self) -> bool:
        return self.status is SolveStatus.COMPLETED

    @property
    def linf(self):
        return None if self.final_error is None else self.final_error.linf

    def series_frame(self) -> pd.DataFrame:
        return pd.DataFrame({ "t": [sample.t for sample in self.error_series],
                              "linf": [sample.linf for sample in self.error_series] })

    def __str__(self):
        if self.completed:
            return f"{self.config.case_id}: completed, L_inf = {self.linf:.4e} at node {self.final_error.argmax_node}"
        return f"{self.config.case_id}: diverged at step {self.diverged_at_step} of {self.n_steps}"

def run_case(config : CaseConfig, sample_every : int = None) -> CaseReport:
    """Builds grid, initial condition and semi-discrete system, integrates to the end time and measures the error.

    The interior maximum error is also sampled every sample_every steps for the error-time curve.
    """
    logger = logging.getLogger("sinc_dqm")

    problem = config.problem_spec()
    grid = problem.grid(config.dx)
    n_steps = steps_for(problem.t_end, config.dt)
    if sample_every is None:
        sample_every = DEFAULT_SAMPLE_EVERY[problem.kind]
    if sample_every < 1:
        raise ValueError(f"Sampling interval must be at least one step, got {sample_every}.")

    system = assemble(problem.params, grid, boundary_values(problem))
    u0 = initial_condition(problem, grid)
    error_series = [linf_error(u0, problem.exact(grid.nodes, 0.0), grid, 0.0)]

    def sample_error(step, t, u_int):
        if step % sample_every == 0 or step == n_steps:
            numeric = system.full_state(t, u_int)
            error_series.append(linf_error(numeric, problem.exact(grid.nodes, t), grid, t))

    if logger.isEnabledFor(logging.DEBUG):
        logger.debug(f"{config.case_id}: stability number {system.spectral_radius() * config.dt:.4g}.")
    logger.info(f"Running {config.case_id} on {grid} for {n_steps} steps.")

    outcome = integrate(system, system.interior(u0), config.dt, n_steps, config.method, observer=sample_error)

    report = CaseReport(config=config,
                        problem=problem,
                        grid=grid,
                        n_steps=n_steps,
                        status=outcome.status,
                        steps_taken=outcome.steps_taken,
                        wall_time=outcome.wall_time,
                        diverged_at_step=outcome.diverged_at_step,
                        error_series=error_series)

    if outcome.completed:
        t_end = n_steps * config.dt
        numeric = system.full_state(t_end, outcome.final_state)
        exact = problem.exact(grid.nodes, t_end)
        report.final_error = linf_error(numeric, exact, grid, t_end)
        report.solution = CaseSolution(t_end, grid.nodes, numeric, exact)
        logger.info(str(report))
    else:
        logger.warning(str(report))

    return report

def emit_solution_csv(report : CaseReport, path = None):
    """Writes the end-time profile to path and the error-time series to '<stem>_errors.csv' next to it.

    Both files start with a '#' comment line holding the full case configuration.
    """
    if not report.completed:
        raise ValueError(f"Case {report.config.case_id} diverged; there is no solution to write.")
    if path is None:
        path = report.config.out
    if path is None:
        raise ValueError(f"Case {report.config.case_id} has no output path.")
    path = Path(path)
    errors_path = path.with_name(f"{path.stem}_errors.csv")
    header = f"# {report.config.describe()}\n"

    for target, frame in ((path, report.solution.to_frame()), (errors_path, report.series_frame())):
        with open(target, "w", newline="") as f:
            f.write(header)
            frame.to_csv(f, index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")

    logging.getLogger("sinc_dqm").info(f"Wrote solution to '{path}' and error series to '{errors_path}'.")
    return path, errors_path
