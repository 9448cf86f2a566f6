"""Differential quadrature weights of the Sinc basis.

The p-th derivative at node x_m is approximated by sum_i w[m][i] u(x_i). With the Sinc basis the weights are
w[m][i] = S_i^(p)(x_m), which reduce to closed forms depending only on m - i.
"""
from dataclasses import dataclass

import numpy as np
from scipy.linalg import toeplitz

from .grid import GridSpec
from .sinc_basis import sinc_matrix

__all__ = ["WeightMatrix",
           "first_order_weights",
           "second_order_weights",
           "weights",
           "derivation_weights",
           "apply_weights"]

@dataclass(frozen=True, eq=False)
class WeightMatrix:
    """Dense N x N weights of the given derivative order. The matrix is read-only once built."""
    order : int
    n_nodes : int
    dx : float
    w : np.ndarray

    def __post_init__(self):
        if self.w.shape != (self.n_nodes, self.n_nodes):
            raise ValueError(f"Weight matrix shape {self.w.shape} does not match {self.n_nodes} nodes.")
        self.w.flags.writeable = False

    def entry(self, m : int, i : int) -> float:
        """Weight w[m][i] using the 1-based node indices."""
        return float(self.w[m - 1, i - 1])

    def apply(self, u_nodal) -> np.ndarray:
        return apply_weights(self, u_nodal)

def _lags(grid : GridSpec) -> np.ndarray:
    return np.arange(1, grid.n_nodes, dtype=float)

def first_order_weights(grid : GridSpec) -> WeightMatrix:
    k = _lags(grid)
    column = np.zeros(grid.n_nodes)
    column[1:] = (-1.0) ** k / (grid.dx * k)
    return WeightMatrix(1, grid.n_nodes, grid.dx, toeplitz(column, -column))

def second_order_weights(grid : GridSpec) -> WeightMatrix:
    k = _lags(grid)
    column = np.empty(grid.n_nodes)
    column[0] = -np.pi ** 2 / (3.0 * grid.dx ** 2)
    column[1:] = 2.0 * (-1.0) ** (k + 1) / (grid.dx ** 2 * k ** 2)
    return WeightMatrix(2, grid.n_nodes, grid.dx, toeplitz(column))

def weights(grid : GridSpec, order : int) -> WeightMatrix:
    if order == 1:
        return first_order_weights(grid)
    elif order == 2:
        return second_order_weights(grid)
    raise ValueError(f"No weights for derivative order {order}; expected 1 or 2.")

def derivation_weights(grid : GridSpec, order : int) -> WeightMatrix:
    """Weights from evaluating every basis derivative at every node. Used to cross-check the closed forms."""
    if order not in (1, 2):
        raise ValueError(f"No weights for derivative order {order}; expected 1 or 2.")
    return WeightMatrix(order, grid.n_nodes, grid.dx, sinc_matrix(grid.nodes, grid, order))

def apply_weights(w : WeightMatrix, u_nodal) -> np.ndarray:
    u_nodal = np.asarray(u_nodal, dtype=float)
    if u_nodal.shape != (w.n_nodes,):
        raise ValueError(f"Expected {w.n_nodes} nodal values, got shape {u_nodal.shape}.")
    return w.w @ u_nodal
