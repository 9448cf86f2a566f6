__all__ = ["SincDqmError", "GridError", "ConfigurationError", "IntegrationError"]

class SincDqmError(Exception):
    """Base class for errors raised by the solver library and the harness."""

class GridError(SincDqmError, ValueError):
    pass

class ConfigurationError(SincDqmError, ValueError):
    pass

class IntegrationError(SincDqmError, ValueError):
    pass
