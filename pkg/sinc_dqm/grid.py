from dataclasses import dataclass

import numpy as np

from .errors import GridError

__all__ = ["GridSpec"]

# Relative tolerance for a spacing to count as dividing the domain.
SPACING_TOLERANCE = 1e-9

@dataclass(frozen=True)
class GridSpec:
    """Uniform one-dimensional node layout over [a, b].

    Nodes are numbered 1..N in every public method: node(1) = a and node(N) = b.
    """
    a : float
    b : float
    n_nodes : int

    def __post_init__(self):
        if int(self.n_nodes) != self.n_nodes or self.n_nodes < 3:
            raise GridError(f"Grid needs at least 3 nodes, got {self.n_nodes}.")
        if not self.b > self.a:
            raise GridError(f"Grid right endpoint {self.b} must exceed left endpoint {self.a}.")
        object.__setattr__(self, "n_nodes", int(self.n_nodes))

    @classmethod
    def from_spacing(cls, a : float, b : float, dx : float) -> "GridSpec":
        """Builds the grid whose spacing is dx, which must divide b - a into whole cells."""
        if not dx > 0:
            raise GridError(f"Grid spacing must be positive, got {dx}.")
        length = b - a
        cells = round(length / dx)
        if cells < 2 or abs(cells * dx - length) > SPACING_TOLERANCE * abs(length):
            raise GridError(f"Spacing {dx} does not divide [{a}, {b}] into a whole number of cells.")
        return cls(a, b, cells + 1)

    @property
    def dx(self) -> float:
        return (self.b - self.a) / (self.n_nodes - 1)

    def node(self, m : int) -> float:
        self.check_index(m)
        if m == self.n_nodes:
            return float(self.b)
        return self.a + (m - 1) * self.dx

    @property
    def nodes(self) -> np.ndarray:
        nodes = self.a + np.arange(self.n_nodes) * self.dx
        nodes[-1] = self.b
        return nodes

    @property
    def interior_nodes(self) -> np.ndarray:
        return self.nodes[1:-1]

    def check_index(self, m : int):
        if not 1 <= m <= self.n_nodes:
            raise IndexError(f"Node index {m} outside 1..{self.n_nodes}.")

    def spans(self, a : float, b : float) -> bool:
        scale = max(abs(a), abs(b), 1.0)
        return abs(self.a - a) <= SPACING_TOLERANCE * scale and abs(self.b - b) <= SPACING_TOLERANCE * scale

    def __str__(self):
        return f"[{self.a:g}, {self.b:g}] with {self.n_nodes} nodes (dx = {self.dx:g})"
