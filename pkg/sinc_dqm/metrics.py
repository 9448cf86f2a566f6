from dataclasses import dataclass

import numpy as np

from .grid import GridSpec

__all__ = ["ErrorSample", "linf_error", "linf_norm_series"]

@dataclass(frozen=True)
class ErrorSample:
    """Discrete maximum error over the interior nodes at time t. argmax_node is 1-based."""
    t : float
    linf : float
    argmax_node : int

def linf_error(numeric, exact, grid : GridSpec, t : float = 0.0) -> ErrorSample:
    numeric = np.asarray(numeric, dtype=float)
    exact = np.asarray(exact, dtype=float)
    for name, values in (("numeric", numeric), ("exact", exact)):
        if values.shape != (grid.n_nodes,):
            raise ValueError(f"Expected {grid.n_nodes} {name} values, got shape {values.shape}.")

    # Boundary nodes are excluded; argmax returns the first (smallest) index on ties.
    difference = np.abs(numeric[1:-1] - exact[1:-1])
    index = int(np.argmax(difference))
    return ErrorSample(t=float(t), linf=float(difference[index]), argmax_node=index + 2)

def linf_norm_series(samples, grid : GridSpec):
    """Maps (t, numeric, exact) triples to error samples."""
    return [linf_error(numeric, exact, grid, t) for t, numeric, exact in samples]
