"""Four-step Adams methods. Histories are ordered newest first: (f_n, f_{n-1}, f_{n-2}, f_{n-3})."""
import numpy as np

from ..errors import IntegrationError

__all__ = ["ab4_step", "am4_pece_step", "HISTORY_LENGTH"]

HISTORY_LENGTH = 4

def _check_history(history, required : int):
    if len(history) < required:
        raise IntegrationError(f"Adams step needs {required} stored derivatives, got {len(history)}.")

def ab4_step(history, u_n, dt : float) -> np.ndarray:
    _check_history(history, HISTORY_LENGTH)
    f0, f1, f2, f3 = list(history)[:HISTORY_LENGTH]
    return np.asarray(u_n, dtype=float) + (dt / 24.0) * (55.0 * f0 - 59.0 * f1 + 37.0 * f2 - 9.0 * f3)

def am4_pece_step(rhs, t_n : float, history, u_n, dt : float) -> np.ndarray:
    """Predicts with AB4, evaluates, and corrects once with the three-step Adams-Moulton formula.

    The final evaluation at the corrected state is left to the caller, which stores it in the history.
    """
    _check_history(history, HISTORY_LENGTH)
    f0, f1, f2 = list(history)[:3]
    predicted = ab4_step(history, u_n, dt)
    f_predicted = rhs(t_n + dt, predicted)
    return np.asarray(u_n, dtype=float) + (dt / 24.0) * (9.0 * f_predicted + 19.0 * f0 - 5.0 * f1 + f2)
