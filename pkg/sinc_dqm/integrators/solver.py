import logging
from collections import deque
from dataclasses import dataclass
from enum import Enum
from time import time

import numpy as np

from ..errors import IntegrationError
from .multistep import HISTORY_LENGTH, ab4_step, am4_pece_step
from .runge_kutta import rk_step, rk_step_embedded
from .tableaus import MULTISTEP_METHODS, TABLEAUS, IntegratorId

__all__ = ["SolveStatus", "SolveOutcome", "DIVERGENCE_THRESHOLD", "detect_divergence", "integrate"]

DIVERGENCE_THRESHOLD = 1e10

class SolveStatus(Enum):
    COMPLETED = "completed"
    DIVERGED = "diverged"

    def __str__(self):
        return self.value

@dataclass
class SolveOutcome:
    status : SolveStatus
    final_state : np.ndarray
    steps_taken : int
    wall_time : float
    diverged_at_step : int = None
    max_error_estimate : float = None

    @property
    def completed(self) -> bool:
        return self.status is SolveStatus.COMPLETED

    @property
    def diverged(self) -> bool:
        return self.status is SolveStatus.DIVERGED

    def __str__(self):
        if self.diverged:
            return f"diverged at step {self.diverged_at_step}"
        return f"completed {self.steps_taken} steps in {self.wall_time:.3f} s"

def detect_divergence(state, threshold : float = DIVERGENCE_THRESHOLD) -> bool:
    state = np.asarray(state)
    if not np.all(np.isfinite(state)):
        return True
    return bool(np.max(np.abs(state), initial=0.0) > threshold)

class AdamsHistory:
    """Derivative history of a four-step Adams method, bootstrapped with RK4 steps."""
    def __init__(self, rhs, t0 : float, u0 : np.ndarray):
        self.rhs = rhs
        self.derivatives = deque([rhs(t0, u0)], maxlen=HISTORY_LENGTH)

    @property
    def ready(self) -> bool:
        return len(self.derivatives) == HISTORY_LENGTH

    def record(self, t : float, u : np.ndarray):
        self.derivatives.appendleft(self.rhs(t, u))

def integrate(rhs,
              u0,
              dt : float,
              n_steps : int,
              method,
              t0 : float = 0.0,
              observer = None,
              threshold : float = DIVERGENCE_THRESHOLD) -> SolveOutcome:
    """Advances u0 by n_steps fixed steps of the given method.

    Multistep methods take their first three steps with RK4. The state is checked for divergence after every step;
    a diverged integration stops early and reports the failing step. observer(step, t, state), when given, is called
    after every accepted step.
    """
    logger = logging.getLogger("sinc_dqm")
    method = IntegratorId.parse(method)
    if not dt > 0:
        raise IntegrationError(f"Time step must be positive, got {dt}.")
    if int(n_steps) != n_steps or n_steps < 1:
        raise IntegrationError(f"Step count must be a positive integer, got {n_steps}.")
    if method in MULTISTEP_METHODS and n_steps < HISTORY_LENGTH:
        raise IntegrationError(f"{method} needs at least {HISTORY_LENGTH} steps, got {n_steps}.")

    u = np.array(u0, dtype=float)
    tableau = None if method in MULTISTEP_METHODS else TABLEAUS[method]
    bootstrap = TABLEAUS[IntegratorId.RK4]
    history = AdamsHistory(rhs, t0, u) if tableau is None else None
    max_error_estimate = 0.0 if tableau is not None and tableau.is_embedded else None

    started_at = time()
    with np.errstate(over="ignore", invalid="ignore"):
        for step in range(1, int(n_steps) + 1):
            t = t0 + (step - 1) * dt
            t_next = t0 + step * dt

            if history is None:
                if max_error_estimate is None:
                    u = rk_step(tableau, rhs, t, u, dt)
                else:
                    u, _, error_estimate = rk_step_embedded(tableau, rhs, t, u, dt)
                    max_error_estimate = max(max_error_estimate, error_estimate)
            else:
                if not history.ready:
                    u = rk_step(bootstrap, rhs, t, u, dt)
                elif method is IntegratorId.AB4:
                    u = ab4_step(history.derivatives, u, dt)
                else:
                    u = am4_pece_step(rhs, t, history.derivatives, u, dt)
                history.record(t_next, u)
                if step == HISTORY_LENGTH - 1:
                    logger.debug(f"{method} bootstrapped with {step} RK4 steps.")

            if detect_divergence(u, threshold):
                wall_time = time() - started_at
                logger.debug(f"{method} diverged at step {step} (t = {t_next:g}).")
                return SolveOutcome(SolveStatus.DIVERGED, None, step, wall_time, diverged_at_step=step)

            if observer is not None:
                observer(step, t_next, u)

    return SolveOutcome(SolveStatus.COMPLETED,
                        u,
                        int(n_steps),
                        time() - started_at,
                        max_error_estimate=max_error_estimate)
