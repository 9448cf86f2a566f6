"""Method-of-lines semi-discretization of u_t + nu u_x - lambda u_xx = 0 with Dirichlet data.

The unknowns are the interior nodal values u(x_2..x_{N-1}); the boundary values enter as a forcing term.
"""
import logging
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .dqm_weights import first_order_weights, second_order_weights
from .errors import GridError
from .grid import GridSpec

__all__ = ["AdeParameters", "BoundarySpec", "SemiDiscreteSystem", "assemble", "rhs", "full_state"]

logger = logging.getLogger("sinc_dqm")

@dataclass(frozen=True)
class AdeParameters:
    """Flow velocity nu and dispersion coefficient lam (lambda); lam = 0 is pure advection."""
    nu : float
    lam : float = 0.0

    def __post_init__(self):
        if self.lam < 0:
            raise ValueError(f"Dispersion coefficient must be non-negative, got {self.lam}.")

def _zero(t : float) -> float:
    return 0.0

@dataclass(frozen=True)
class BoundarySpec:
    b1 : Callable[[float], float] = _zero
    b2 : Callable[[float], float] = _zero

    @classmethod
    def homogeneous(cls) -> "BoundarySpec":
        return cls(_zero, _zero)

    def values(self, t : float):
        return self.b1(t), self.b2(t)

@dataclass(frozen=True, eq=False)
class SemiDiscreteSystem:
    """Linear ODE system du/dt = A u + g1 b1(t) + gN b2(t) over the interior unknowns."""
    A : np.ndarray
    g1 : np.ndarray
    gN : np.ndarray
    boundary : BoundarySpec
    grid : GridSpec

    def __post_init__(self):
        size = self.grid.n_nodes - 2
        if self.A.shape != (size, size) or self.g1.shape != (size,) or self.gN.shape != (size,):
            raise ValueError(f"System arrays do not match {size} interior unknowns.")
        for array in (self.A, self.g1, self.gN):
            array.flags.writeable = False

    @property
    def size(self) -> int:
        return self.grid.n_nodes - 2

    def forcing(self, t : float) -> np.ndarray:
        b1, b2 = self.boundary.values(t)
        return self.g1 * b1 + self.gN * b2

    def rhs(self, t : float, u_int) -> np.ndarray:
        return rhs(self, t, u_int)

    __call__ = rhs

    def full_state(self, t : float, u_int) -> np.ndarray:
        return full_state(self, t, u_int)

    def interior(self, u_full) -> np.ndarray:
        u_full = np.asarray(u_full, dtype=float)
        if u_full.shape != (self.grid.n_nodes,):
            raise ValueError(f"Expected {self.grid.n_nodes} nodal values, got shape {u_full.shape}.")
        return u_full[1:-1].copy()

    def spectral_radius(self) -> float:
        return float(np.max(np.abs(np.linalg.eigvals(self.A))))

def _check_interior(system : SemiDiscreteSystem, u_int) -> np.ndarray:
    u_int = np.asarray(u_int, dtype=float)
    if u_int.shape != (system.size,):
        raise ValueError(f"Expected {system.size} interior values, got shape {u_int.shape}.")
    return u_int

def assemble(params : AdeParameters, grid : GridSpec, boundary : BoundarySpec = None) -> SemiDiscreteSystem:
    if grid.n_nodes < 4:
        raise GridError(f"Semi-discretization needs at least 4 nodes, got {grid.n_nodes}.")
    if boundary is None:
        boundary = BoundarySpec.homogeneous()

    w1 = first_order_weights(grid).w
    w2 = second_order_weights(grid).w
    operator = -params.nu * w1 + params.lam * w2

    logger.debug(f"Assembled {grid.n_nodes - 2} interior unknowns on {grid} (nu = {params.nu}, lambda = {params.lam}).")
    return SemiDiscreteSystem(A=operator[1:-1, 1:-1].copy(),
                              g1=operator[1:-1, 0].copy(),
                              gN=operator[1:-1, -1].copy(),
                              boundary=boundary,
                              grid=grid)

def rhs(system : SemiDiscreteSystem, t : float, u_int) -> np.ndarray:
    u_int = _check_interior(system, u_int)
    return system.A @ u_int + system.forcing(t)

def full_state(system : SemiDiscreteSystem, t : float, u_int) -> np.ndarray:
    """Splices the boundary values at t around the interior unknowns."""
    u_int = _check_interior(system, u_int)
    b1, b2 = system.boundary.values(t)
    return np.concatenate(([b1], u_int, [b2]))
