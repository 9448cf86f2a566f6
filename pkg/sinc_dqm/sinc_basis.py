"""Sinc cardinal functions on a uniform grid and their first two derivatives.

S_m(x) = sin(pi u) / (pi u) with u = (x - x_m) / dx. Public contracts use the 1-based node index m.
"""
import numpy as np

from .grid import GridSpec

__all__ = ["sinc_eval", "sinc_derivative", "sinc_matrix", "cardinal_interpolate"]

# Below this offset (in units of dx) the removable singularity is replaced by its limit value.
NODE_TOLERANCE = 1e-9
# Below this offset the derivatives come from Taylor series; the ratio forms cancel catastrophically there.
SERIES_RADIUS = 1e-2

SUPPORTED_ORDERS = (0, 1, 2)

def _cardinal(u : np.ndarray, order : int) -> np.ndarray:
    """Derivative of sin(pi u) / (pi u) of the given order with respect to u."""
    if order == 0:
        # Kronecker delta at every node, not the ratio's round-off.
        nearest = np.rint(u)
        at_node = np.abs(u - nearest) < NODE_TOLERANCE
        return np.where(at_node, np.where(nearest == 0.0, 1.0, 0.0), np.sinc(u))

    near = np.abs(u) < SERIES_RADIUS
    w = np.where(near, 1.0, u)
    s, c = np.sin(np.pi * w), np.cos(np.pi * w)
    z2 = (np.pi * u) ** 2

    if order == 1:
        ratio = (np.pi * w * c - s) / (np.pi * w ** 2)
        series = np.pi * (np.pi * u) * (-1.0 / 3.0 + z2 * (1.0 / 30.0 - z2 * (1.0 / 840.0 - z2 / 45360.0)))
        limit = 0.0
    else:
        ratio = -np.pi * s / w - 2.0 * c / w ** 2 + 2.0 * s / (np.pi * w ** 3)
        series = np.pi ** 2 * (-1.0 / 3.0 + z2 * (1.0 / 10.0 - z2 * (1.0 / 168.0 - z2 / 6480.0)))
        limit = -np.pi ** 2 / 3.0

    values = np.where(near, series, ratio)
    return np.where(np.abs(u) < NODE_TOLERANCE, limit, values)

def _check_order(order : int, allowed = SUPPORTED_ORDERS):
    if order not in allowed:
        raise ValueError(f"Unsupported derivative order {order}; expected one of {allowed}.")

def _output(values : np.ndarray, x):
    return float(values) if np.ndim(x) == 0 else values

def sinc_eval(x, m : int, grid : GridSpec):
    """Evaluates S_m at x, which may be a scalar or an array."""
    grid.check_index(m)
    u = (np.asarray(x, dtype=float) - grid.node(m)) / grid.dx
    return _output(_cardinal(u, 0), x)

def sinc_derivative(x, m : int, grid : GridSpec, order : int):
    """Evaluates the first or second derivative of S_m with respect to x."""
    _check_order(order, (1, 2))
    grid.check_index(m)
    u = (np.asarray(x, dtype=float) - grid.node(m)) / grid.dx
    return _output(_cardinal(u, order) / grid.dx ** order, x)

def sinc_matrix(points, grid : GridSpec, order : int = 0) -> np.ndarray:
    """Returns M with M[k, m - 1] = S_m^(order)(points[k]) for every basis function of the grid."""
    _check_order(order)
    points = np.atleast_1d(np.asarray(points, dtype=float))
    u = (points[:, np.newaxis] - grid.nodes[np.newaxis, :]) / grid.dx
    return _cardinal(u, order) / grid.dx ** order

def cardinal_interpolate(samples, x, grid : GridSpec):
    """Truncated cardinal series sum_m samples[m] S_m(x) over the grid's N samples."""
    samples = np.asarray(samples, dtype=float)
    if samples.shape != (grid.n_nodes,):
        raise ValueError(f"Expected {grid.n_nodes} samples, got shape {samples.shape}.")
    values = sinc_matrix(x, grid) @ samples
    return float(values[0]) if np.ndim(x) == 0 else values
