from .tableaus import *
from .runge_kutta import *
from .multistep import *
from .solver import *

__all__ = (*tableaus.__all__,
           *runge_kutta.__all__,
           *multistep.__all__,
           *solver.__all__)
