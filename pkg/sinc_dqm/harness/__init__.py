from .config import *
from .case_runner import *
from .reference_tables import *
from .table_report import *
from .convergence import *
from .runner import BenchmarkRunner
from .executor import CaseExecutor

__all__ = ["BenchmarkRunner",
           "CaseExecutor",
           *config.__all__,
           *case_runner.__all__,
           *reference_tables.__all__,
           *table_report.__all__,
           *convergence.__all__]
