import numpy as np
import pytest

from sinc_dqm.errors import GridError, SincDqmError
from sinc_dqm.grid import GridSpec

def test_nodes_are_uniform_and_end_exactly_on_b():
    grid = GridSpec(0.0, 9.0, 361)
    assert grid.dx == pytest.approx(0.025)
    assert grid.nodes[0] == 0.0
    assert grid.nodes[-1] == 9.0
    assert np.allclose(np.diff(grid.nodes), 0.025)

def test_node_uses_one_based_indices():
    grid = GridSpec(0.0, 9000.0, 46)
    assert grid.node(1) == 0.0
    assert grid.node(2) == pytest.approx(200.0)
    assert grid.node(46) == 9000.0
    with pytest.raises(IndexError):
        grid.node(0)
    with pytest.raises(IndexError):
        grid.node(47)

def test_interior_nodes_drop_the_endpoints(unit_grid):
    assert np.array_equal(unit_grid.interior_nodes, np.arange(1.0, 10.0))

@pytest.mark.parametrize("a, b, dx, n_nodes", [(0.0, 9000.0, 200.0, 46),
                                              (0.0, 9000.0, 25.0, 361),
                                              (0.0, 9.0, 0.2, 46),
                                              (0.0, 9.0, 0.025, 361)])
def test_from_spacing_matches_benchmark_meshes(a, b, dx, n_nodes):
    grid = GridSpec.from_spacing(a, b, dx)
    assert grid.n_nodes == n_nodes
    assert grid.dx == pytest.approx(dx)

def test_from_spacing_rejects_spacing_that_does_not_divide_the_domain():
    with pytest.raises(GridError):
        GridSpec.from_spacing(0.0, 9.0, 0.4)
    with pytest.raises(GridError):
        GridSpec.from_spacing(0.0, 9.0, -0.1)

@pytest.mark.parametrize("a, b, n_nodes", [(0.0, 1.0, 2), (1.0, 1.0, 5), (2.0, 1.0, 5)])
def test_invalid_grids_are_rejected(a, b, n_nodes):
    with pytest.raises(GridError) as error:
        GridSpec(a, b, n_nodes)
    assert isinstance(error.value, SincDqmError)
    assert isinstance(error.value, ValueError)

def test_spans_tolerates_rounding():
    grid = GridSpec.from_spacing(0.0, 9.0, 0.05)
    assert grid.spans(0.0, 9.0 + 1e-12)
    assert not grid.spans(0.0, 9.5)
