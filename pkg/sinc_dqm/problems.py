"""The two benchmark initial-boundary-value problems and their closed-form solutions.

Pure advection works in meters and seconds on a 9 km channel. The fadeout problem uses dimensionless length on [0, 9].
"""
from dataclasses import dataclass, replace
from enum import Enum

import numpy as np

from .ade import AdeParameters, BoundarySpec
from .errors import ConfigurationError, GridError
from .grid import GridSpec

__all__ = ["ProblemKind", "ProblemSpec", "exact_solution", "initial_condition", "boundary_values"]

class ProblemKind(Enum):
    PURE_ADVECTION = "pure_advection"
    ADVECTION_DISPERSION = "advection_dispersion"

    @classmethod
    def parse(cls, name) -> "ProblemKind":
        if isinstance(name, cls):
            return name
        key = str(name).strip().lower().replace("-", "_")
        aliases = { "advection": cls.PURE_ADVECTION,
                    "pureadvection": cls.PURE_ADVECTION,
                    "fadeout": cls.ADVECTION_DISPERSION,
                    "advectiondispersion": cls.ADVECTION_DISPERSION }
        if key in aliases:
            return aliases[key]
        try:
            return cls(key)
        except ValueError:
            raise ConfigurationError(f"Unknown problem '{name}'. Known problems: pure_advection, advection_dispersion.") from None

    def __str__(self):
        return self.value

@dataclass(frozen=True)
class ProblemSpec:
    kind : ProblemKind
    a : float
    b : float
    t_end : float
    params : AdeParameters
    x_tilde : float
    amplitude : float
    rho : float = None

    def __post_init__(self):
        if not self.a <= self.x_tilde <= self.b:
            raise ConfigurationError(f"Initial peak {self.x_tilde} lies outside [{self.a}, {self.b}].")
        if not self.t_end > 0:
            raise ConfigurationError(f"End time must be positive, got {self.t_end}.")
        if self.kind is ProblemKind.PURE_ADVECTION and not (self.rho is not None and self.rho > 0):
            raise ConfigurationError(f"Pure advection needs a positive standard deviation, got {self.rho}.")
        if self.kind is ProblemKind.ADVECTION_DISPERSION and not self.params.lam > 0:
            raise ConfigurationError(f"Fadeout needs a positive dispersion coefficient, got {self.params.lam}.")

    @classmethod
    def default(cls, kind) -> "ProblemSpec":
        kind = ProblemKind.parse(kind)
        if kind is ProblemKind.PURE_ADVECTION:
            return cls(kind, a=0.0, b=9000.0, t_end=9600.0, params=AdeParameters(nu=0.5, lam=0.0),
                       x_tilde=2000.0, amplitude=10.0, rho=264.0)
        return cls(kind, a=0.0, b=9.0, t_end=5.0, params=AdeParameters(nu=0.8, lam=0.005),
                   x_tilde=1.0, amplitude=1.0)

    def with_overrides(self, nu = None, lam = None, rho = None, x_tilde = None, t_end = None) -> "ProblemSpec":
        """Returns a copy with the given parameters replaced; None keeps the current value."""
        params = AdeParameters(nu=self.params.nu if nu is None else nu,
                               lam=self.params.lam if lam is None else lam)
        return replace(self,
                       params=params,
                       rho=self.rho if rho is None else rho,
                       x_tilde=self.x_tilde if x_tilde is None else x_tilde,
                       t_end=self.t_end if t_end is None else t_end)

    @property
    def domain(self):
        return self.a, self.b

    def grid(self, dx : float) -> GridSpec:
        return GridSpec.from_spacing(self.a, self.b, dx)

    def peak_position(self, t : float) -> float:
        return self.x_tilde + self.params.nu * t

    def peak_amplitude(self, t : float) -> float:
        if self.kind is ProblemKind.PURE_ADVECTION:
            return self.amplitude
        return self.amplitude / np.sqrt(4.0 * t + 1.0)

    def exact(self, x, t : float):
        return exact_solution(self, x, t)

def exact_solution(problem : ProblemSpec, x, t : float):
    if t < 0:
        raise ValueError(f"Exact solutions are defined for t >= 0, got {t}.")
    xi = np.asarray(x, dtype=float) - problem.peak_position(t)
    if problem.kind is ProblemKind.PURE_ADVECTION:
        values = problem.amplitude * np.exp(-xi ** 2 / (2.0 * problem.rho ** 2))
    else:
        spread = 4.0 * t + 1.0
        values = problem.amplitude / np.sqrt(spread) * np.exp(-xi ** 2 / (problem.params.lam * spread))
    return float(values) if np.ndim(x) == 0 else values

def initial_condition(problem : ProblemSpec, grid : GridSpec) -> np.ndarray:
    if not grid.spans(problem.a, problem.b):
        raise GridError(f"Grid {grid} does not span the problem domain [{problem.a}, {problem.b}].")
    return exact_solution(problem, grid.nodes, 0.0)

def boundary_values(problem : ProblemSpec) -> BoundarySpec:
    """Both benchmarks prescribe homogeneous Dirichlet data at both ends."""
    return BoundarySpec.homogeneous()
