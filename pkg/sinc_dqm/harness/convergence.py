import logging
from dataclasses import dataclass

import numpy as np
import pandas as pd

from ..errors import ConfigurationError
from ..integrators import IntegratorId
from ..problems import ProblemKind
from .case_runner import run_case
from .config import CaseConfig, steps_for

__all__ = ["ConvergenceReport", "observed_order", "run_convergence"]

def observed_order(steps, errors):
    """Slope of the least-squares line through (log step, log error), or None with fewer than two points."""
    steps = np.asarray(steps, dtype=float)
    errors = np.asarray(errors, dtype=float)
    usable = np.isfinite(errors) & (errors > 0)
    if np.count_nonzero(usable) < 2:
        return None
    slope, _ = np.polyfit(np.log(steps[usable]), np.log(errors[usable]), 1)
    return float(slope)

@dataclass
class ConvergenceReport:
    problem : ProblemKind
    method : IntegratorId
    errors : pd.DataFrame

    @property
    def spatial_orders(self) -> dict:
        return { dt: observed_order(self.errors.index, self.errors[dt]) for dt in self.errors.columns }

    @property
    def temporal_orders(self) -> dict:
        return { dx: observed_order(self.errors.columns, self.errors.loc[dx]) for dx in self.errors.index }

    def render(self) -> str:
        lines = [f"Maximum error of {self.method} on {self.problem} (rows dx, columns dt; nan = diverged)",
                 "",
                 self.errors.to_string(float_format=lambda value: f"{value:.4e}"),
                 ""]
        for dt, order in self.spatial_orders.items():
            if order is not None:
                lines.append(f"dt = {dt:g}: observed spatial order {order:.2f}")
        for dx, order in self.temporal_orders.items():
            if order is not None:
                lines.append(f"dx = {dx:g}: observed temporal order {order:.2f}")
        return "\n".join(lines) + "\n"

    def write_csv(self, path):
        frame = self.errors.reset_index().melt(id_vars="dx", var_name="dt", value_name="linf")
        frame.to_csv(path, index=False, float_format="%.17g", lineterminator="\n")

def run_convergence(problem, method, dx_list, dt_list, runner = None) -> ConvergenceReport:
    """Runs every (dx, dt) pair and tabulates the final maximum errors."""
    logger = logging.getLogger("sinc_dqm")
    dx_list = sorted({ float(dx) for dx in dx_list }, reverse=True)
    dt_list = sorted({ float(dt) for dt in dt_list }, reverse=True)
    configs = [CaseConfig(problem=problem, method=method, dx=dx, dt=dt) for dx in dx_list for dt in dt_list]
    if not configs:
        raise ConfigurationError("Convergence runs need at least one dx and one dt.")

    # Reject meshes that do not divide the domain or the end time before running anything.
    for config in configs:
        problem_spec = config.problem_spec()
        problem_spec.grid(config.dx)
        steps_for(problem_spec.t_end, config.dt)

    if runner is None:
        reports = [run_case(config) for config in configs]
    else:
        reports = runner.run_cases(configs, description="convergence")

    errors = pd.DataFrame(np.nan, index=pd.Index(dx_list, name="dx"), columns=pd.Index(dt_list, name="dt"))
    for config, report in zip(configs, reports):
        if report.completed:
            errors.loc[config.dx, config.dt] = report.linf

    logger.info(f"Convergence grid of {len(configs)} cases finished.")
    return ConvergenceReport(configs[0].problem, configs[0].method, errors)
