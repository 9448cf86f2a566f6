from .file_logger import FileLogger
from .monitor_daemon import MonitorDaemon
from .case_statistics import *

__all__ = (
        "FileLogger",
        "MonitorDaemon",
        *case_statistics.__all__
        )
