# This relies on each of the submodules having an __all__ variable.
from .errors import *
from .grid import *
from .sinc_basis import *
from .dqm_weights import *
from .ade import *
from .integrators import *
from .problems import *
from .metrics import *

__all__ = (*errors.__all__,
           *grid.__all__,
           *sinc_basis.__all__,
           *dqm_weights.__all__,
           *ade.__all__,
           *integrators.__all__,
           *problems.__all__,
           *metrics.__all__)
