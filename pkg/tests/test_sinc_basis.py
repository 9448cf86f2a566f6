import numpy as np
import pytest

from sinc_dqm.grid import GridSpec
from sinc_dqm.sinc_basis import cardinal_interpolate, sinc_derivative, sinc_eval, sinc_matrix

def test_sinc_is_one_at_its_own_node_and_zero_at_the_others(unit_grid):
    assert sinc_eval(unit_grid.node(4), 4, unit_grid) == 1.0
    for j in range(1, unit_grid.n_nodes + 1):
        if j != 4:
            assert sinc_eval(unit_grid.node(j), 4, unit_grid) == 0.0

def test_sinc_half_a_cell_away(unit_grid):
    assert sinc_eval(unit_grid.node(5) + 0.5, 5, unit_grid) == pytest.approx(2.0 / np.pi, rel=1e-14)

def test_sinc_eval_accepts_arrays(unit_grid):
    values = sinc_eval(unit_grid.nodes, 3, unit_grid)
    expected = np.zeros(unit_grid.n_nodes)
    expected[2] = 1.0
    assert values.shape == (unit_grid.n_nodes,)
    assert np.array_equal(values, expected)

def test_derivatives_at_the_node_take_their_limit_values(unit_grid):
    x = unit_grid.node(6)
    assert sinc_derivative(x, 6, unit_grid, 1) == 0.0
    assert sinc_derivative(x, 6, unit_grid, 2) == pytest.approx(-np.pi ** 2 / 3.0, rel=1e-14)

def test_first_derivative_one_node_away(unit_grid):
    x = unit_grid.node(6)
    assert sinc_derivative(x - 1.0, 6, unit_grid, 1) == pytest.approx(1.0, rel=1e-12)
    assert sinc_derivative(x + 1.0, 6, unit_grid, 1) == pytest.approx(-1.0, rel=1e-12)

def test_derivatives_scale_with_the_spacing():
    grid = GridSpec(0.0, 1.0, 11)
    x = grid.node(4)
    assert sinc_derivative(x, 4, grid, 2) == pytest.approx(-np.pi ** 2 / (3.0 * grid.dx ** 2), rel=1e-13)
    assert sinc_derivative(x - grid.dx, 4, grid, 1) == pytest.approx(1.0 / grid.dx, rel=1e-12)

@pytest.mark.parametrize("order", [1, 2])
def test_derivatives_are_continuous_across_the_series_radius(unit_grid, order):
    x = unit_grid.node(5)
    offsets = np.array([1e-12, 1e-7, 5e-3, 0.00999, 0.01001, 0.02])
    values = sinc_derivative(x + offsets, 5, unit_grid, order)

    # Central differences of the lower order derivative away from the node.
    h = 1e-6
    lower = (lambda y: sinc_eval(y, 5, unit_grid)) if order == 1 else \
            (lambda y: sinc_derivative(y, 5, unit_grid, 1))
    for offset, value in zip(offsets[2:], values[2:]):
        estimate = (lower(x + offset + h) - lower(x + offset - h)) / (2.0 * h)
        assert value == pytest.approx(estimate, abs=1e-6)
    assert np.all(np.isfinite(values))

def test_unsupported_derivative_order_is_rejected(unit_grid):
    with pytest.raises(ValueError):
        sinc_derivative(0.5, 1, unit_grid, 3)

def test_node_index_is_checked(unit_grid):
    with pytest.raises(IndexError):
        sinc_eval(0.0, 0, unit_grid)

def test_sinc_matrix_columns_follow_the_basis(unit_grid, rng):
    points = rng.uniform(0.0, 10.0, size=7)
    matrix = sinc_matrix(points, unit_grid, order=1)
    assert matrix.shape == (7, unit_grid.n_nodes)
    for m in (1, 5, 11):
        assert np.allclose(matrix[:, m - 1], sinc_derivative(points, m, unit_grid, 1), rtol=1e-13, atol=1e-15)

def test_interpolation_reproduces_samples_at_the_nodes(unit_grid, rng):
    samples = rng.normal(size=unit_grid.n_nodes)
    for j in (1, 6, 11):
        assert cardinal_interpolate(samples, unit_grid.node(j), unit_grid) == samples[j - 1]

def test_interpolating_a_one_hot_vector_gives_the_basis_function(unit_grid):
    samples = np.zeros(unit_grid.n_nodes)
    samples[3] = 1.0
    x = np.array([0.3, 2.7, 3.5, 8.9])
    assert np.allclose(cardinal_interpolate(samples, x, unit_grid), sinc_eval(x, 4, unit_grid))

def test_interpolation_of_a_smooth_function_at_a_cell_midpoint():
    grid = GridSpec(0.0, 2.0 * np.pi, 101)
    x = np.pi + grid.dx / 2.0
    assert cardinal_interpolate(np.sin(grid.nodes), x, grid) == pytest.approx(np.sin(x), abs=1e-3)

def test_interpolation_rejects_mismatched_samples(unit_grid):
    with pytest.raises(ValueError):
        cardinal_interpolate(np.ones(5), 1.0, unit_grid)

@pytest.mark.parametrize("grid", [GridSpec(0.0, 10.0, 11), GridSpec(0.0, 9.0, 46)])
def test_basis_is_even_and_its_derivative_odd_about_the_node(grid, rng):
    m = grid.n_nodes // 2
    offsets = rng.uniform(0.0, 4.0, size=50) * grid.dx
    right, left = grid.node(m) + offsets, grid.node(m) - offsets
    np.testing.assert_allclose(sinc_eval(right, m, grid), sinc_eval(left, m, grid), rtol=0.0, atol=1e-12)
    np.testing.assert_allclose(sinc_derivative(right, m, grid, 1), -sinc_derivative(left, m, grid, 1),
                               rtol=0.0, atol=1e-10 / grid.dx)
    np.testing.assert_allclose(sinc_derivative(right, m, grid, 2), sinc_derivative(left, m, grid, 2),
                               rtol=0.0, atol=1e-8 / grid.dx ** 2)

@pytest.mark.parametrize("grid", [GridSpec(0.0, 10.0, 11), GridSpec(0.0, 9.0, 46)])
@pytest.mark.parametrize("order", [1, 2])
def test_derivatives_match_central_differences_between_nodes(grid, order, rng):
    m = 4
    # At least a tenth of a cell away from every node.
    cells = rng.integers(0, grid.n_nodes - 1, size=100)
    fractions = rng.uniform(0.1, 0.9, size=100)
    x = grid.a + (cells + fractions) * grid.dx
    h = 1e-5 * grid.dx

    lower = sinc_eval if order == 1 else (lambda y, m, grid: sinc_derivative(y, m, grid, 1))
    estimate = (lower(x + h, m, grid) - lower(x - h, m, grid)) / (2.0 * h)
    np.testing.assert_allclose(sinc_derivative(x, m, grid, order), estimate,
                               rtol=1e-6, atol=1e-8 / grid.dx ** order)
