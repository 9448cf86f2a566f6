from dataclasses import dataclass
from enum import Enum

import numpy as np

from ..errors import ConfigurationError, IntegrationError

__all__ = ["IntegratorId", "ButcherTableau", "TABLEAUS", "MULTISTEP_METHODS", "order_of"]

class IntegratorId(Enum):
    FORE = "FORE"
    IMPOLY = "IMPOLY"
    HEUN = "HEUN"
    RK2 = "RK2"
    RK3 = "RK3"
    RK4 = "RK4"
    RKF45 = "RKF45"
    RKCK45 = "RKCK45"
    AB4 = "AB4"
    AM4 = "AM4"

    @classmethod
    def parse(cls, name) -> "IntegratorId":
        if isinstance(name, cls):
            return name
        try:
            return cls(str(name).strip().upper())
        except ValueError:
            known = ", ".join(method.value for method in cls)
            raise ConfigurationError(f"Unknown integration method '{name}'. Known methods: {known}.") from None

    def __str__(self):
        return self.value

# Consistency checks are exact in rational arithmetic; this allows for the rounding of the float coefficients.
CONSISTENCY_TOLERANCE = 1e-13

@dataclass(frozen=True, eq=False)
class ButcherTableau:
    """Explicit Runge-Kutta coefficients.

    Embedded pairs also carry b_embedded, the weights of the lower order companion solution.
    """
    name : str
    a : np.ndarray
    b : np.ndarray
    c : np.ndarray
    order : int
    b_embedded : np.ndarray = None

    def __post_init__(self):
        for field in ("a", "b", "c", "b_embedded"):
            value = getattr(self, field)
            if value is None:
                continue
            array = np.array(value, dtype=float)
            array.flags.writeable = False
            object.__setattr__(self, field, array)
        self.validate()

    @property
    def stages(self) -> int:
        return len(self.b)

    @property
    def is_embedded(self) -> bool:
        return self.b_embedded is not None

    def validate(self):
        s = self.stages
        if self.a.shape != (s, s) or self.c.shape != (s,):
            raise IntegrationError(f"Tableau {self.name} has inconsistent shapes.")
        if np.any(np.triu(self.a) != 0.0):
            raise IntegrationError(f"Tableau {self.name} is not explicit.")
        if np.max(np.abs(self.a.sum(axis=1) - self.c)) > CONSISTENCY_TOLERANCE:
            raise IntegrationError(f"Tableau {self.name} nodes are not the row sums of its coefficients.")
        for weights in (self.b, self.b_embedded):
            if weights is not None and abs(weights.sum() - 1.0) > CONSISTENCY_TOLERANCE:
                raise IntegrationError(f"Tableau {self.name} weights do not sum to one.")

def _lower(rows):
    """Expands the ragged rows below the diagonal into a square coefficient matrix."""
    s = len(rows) + 1
    a = np.zeros((s, s))
    for i, row in enumerate(rows, start=1):
        a[i, :len(row)] = row
    return a

_MIDPOINT = dict(a=_lower([[1/2]]), b=[0, 1], c=[0, 1/2], order=2)

TABLEAUS = {
    IntegratorId.FORE: ButcherTableau("FORE", a=_lower([]), b=[1], c=[0], order=1),
    IntegratorId.IMPOLY: ButcherTableau("IMPOLY", **_MIDPOINT),
    IntegratorId.HEUN: ButcherTableau("HEUN", a=_lower([[1]]), b=[1/2, 1/2], c=[0, 1], order=2),
    IntegratorId.RK2: ButcherTableau("RK2", **_MIDPOINT),
    IntegratorId.RK3: ButcherTableau("RK3",
                                     a=_lower([[1/2],
                                               [-1, 2]]),
                                     b=[1/6, 2/3, 1/6],
                                     c=[0, 1/2, 1],
                                     order=3),
    IntegratorId.RK4: ButcherTableau("RK4",
                                     a=_lower([[1/2],
                                               [0, 1/2],
                                               [0, 0, 1]]),
                                     b=[1/6, 1/3, 1/3, 1/6],
                                     c=[0, 1/2, 1/2, 1],
                                     order=4),
    # Fehlberg pair, propagating the fifth order solution.
    IntegratorId.RKF45: ButcherTableau("RKF45",
                                       a=_lower([[1/4],
                                                 [3/32, 9/32],
                                                 [1932/2197, -7200/2197, 7296/2197],
                                                 [439/216, -8, 3680/513, -845/4104],
                                                 [-8/27, 2, -3544/2565, 1859/4104, -11/40]]),
                                       b=[16/135, 0, 6656/12825, 28561/56430, -9/50, 2/55],
                                       c=[0, 1/4, 3/8, 12/13, 1, 1/2],
                                       order=5,
                                       b_embedded=[25/216, 0, 1408/2565, 2197/4104, -1/5, 0]),
    # Cash-Karp pair, propagating the fifth order solution.
    IntegratorId.RKCK45: ButcherTableau("RKCK45",
                                        a=_lower([[1/5],
                                                  [3/40, 9/40],
                                                  [3/10, -9/10, 6/5],
                                                  [-11/54, 5/2, -70/27, 35/27],
                                                  [1631/55296, 175/512, 575/13824, 44275/110592, 253/4096]]),
                                        b=[37/378, 0, 250/621, 125/594, 0, 512/1771],
                                        c=[0, 1/5, 3/10, 3/5, 1, 7/8],
                                        order=5,
                                        b_embedded=[2825/27648, 0, 18575/48384, 13525/55296, 277/14336, 1/4]),
}

MULTISTEP_METHODS = (IntegratorId.AB4, IntegratorId.AM4)

def order_of(method) -> int:
    method = IntegratorId.parse(method)
    if method in MULTISTEP_METHODS:
        return 4
    return TABLEAUS[method].order
