import numpy as np

from ..errors import IntegrationError
from .tableaus import ButcherTableau

__all__ = ["rk_step", "rk_step_embedded"]

def _stages(tableau : ButcherTableau, rhs, t : float, u : np.ndarray, dt : float) -> np.ndarray:
    if not dt > 0:
        raise IntegrationError(f"Time step must be positive, got {dt}.")
    k = np.empty((tableau.stages,) + u.shape)
    for i in range(tableau.stages):
        k[i] = rhs(t + tableau.c[i] * dt, u + dt * (tableau.a[i, :i] @ k[:i]))
    return k

def rk_step(tableau : ButcherTableau, rhs, t : float, u, dt : float) -> np.ndarray:
    """Advances u by one explicit Runge-Kutta step. Non-finite stages propagate into the result."""
    u = np.asarray(u, dtype=float)
    k = _stages(tableau, rhs, t, u, dt)
    return u + dt * (tableau.b @ k)

def rk_step_embedded(tableau : ButcherTableau, rhs, t : float, u, dt : float):
    """Returns the propagated solution, the embedded companion solution and the max-norm of their difference."""
    if not tableau.is_embedded:
        raise IntegrationError(f"Tableau {tableau.name} has no embedded solution.")
    u = np.asarray(u, dtype=float)
    k = _stages(tableau, rhs, t, u, dt)
    high = u + dt * (tableau.b @ k)
    low = u + dt * (tableau.b_embedded @ k)
    return high, low, float(np.max(np.abs(high - low)))
