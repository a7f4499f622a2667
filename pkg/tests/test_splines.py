import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from softiga.meshing import uniform_mesh
from softiga.splines import (Mesh1D, collocation_matrix, eval_basis,
                             eval_all_derivatives, open_knot_vector,
                             pth_derivative_jumps)


def test_mesh_validation():
    with pytest.raises(ValueError):
        Mesh1D(np.array([0.0]))
    with pytest.raises(ValueError):
        Mesh1D(np.array([0.0, 0.0, 1.0]))
    with pytest.raises(ValueError):
        Mesh1D(np.array([0.0, 1.0, 0.5]))
    mesh = Mesh1D(np.array([0.0, 0.25, 1.0]))
    assert mesh.n_elements == 2
    assert mesh.element_sizes == pytest.approx([0.25, 0.75])


def test_open_knot_vector_p1():
    space = open_knot_vector(1, Mesh1D(np.array([0.0, 0.5, 1.0])))
    assert space.knots.tolist() == [0.0, 0.0, 0.5, 1.0, 1.0]
    assert space.n_untrimmed == 3
    assert space.dimension == 1


def test_open_knot_vector_p2():
    space = open_knot_vector(2, Mesh1D(np.array([-1.0, 0.0, 1.0])))
    assert space.knots.tolist() == [-1.0, -1.0, -1.0, 0.0, 1.0, 1.0, 1.0]
    assert space.n_untrimmed == 4
    assert space.dimension == 2


def test_open_knot_vector_septic_counts():
    space = open_knot_vector(7, uniform_mesh(20.0, 5000))
    assert space.n_untrimmed == 5007
    assert space.dimension == 5005


def test_invalid_degree_rejected():
    mesh = uniform_mesh(1.0, 4)
    with pytest.raises(ValueError):
        open_knot_vector(0, mesh)


@given(st.integers(min_value=1, max_value=5), st.integers(min_value=1, max_value=12),
       st.floats(min_value=-1.0, max_value=1.0))
def test_partition_of_unity(p, n, x):
    space = open_knot_vector(p, uniform_mesh(1.0, n))
    _, vals = eval_basis(space, x, 0)
    assert vals.sum() == pytest.approx(1.0, abs=1e-12)
    assert np.all(vals >= -1e-14)


def test_hat_nodal_interpolation():
    space = open_knot_vector(1, uniform_mesh(1.0, 4))
    for node_index, node in enumerate(space.mesh.breakpoints):
        idx, vals = eval_basis(space, float(node), 0)
        dense = np.zeros(space.n_untrimmed)
        dense[idx] = vals
        expect = np.zeros(space.n_untrimmed)
        expect[node_index] = 1.0
        assert dense == pytest.approx(expect, abs=1e-14)


def test_quadratic_knot_values():
    # hand evaluation of the recursion on uniform knots: the two functions
    # spanning an interior knot each take the value 1/2 there
    space = open_knot_vector(2, uniform_mesh(2.0, 4))
    for face in (1, 2, 3):
        x = float(space.mesh.breakpoints[face])
        _, vals = eval_basis(space, x, 0)
        nonzero = sorted(v for v in vals if abs(v) > 1e-14)
        assert nonzero == pytest.approx([0.5, 0.5], abs=1e-14)


def test_derivative_order_validation():
    space = open_knot_vector(2, uniform_mesh(1.0, 4))
    with pytest.raises(ValueError):
        eval_basis(space, 0.1, 3)
    with pytest.raises(ValueError):
        eval_basis(space, 1.5, 0)


@given(st.integers(min_value=1, max_value=5),
       st.floats(min_value=-0.95, max_value=0.95))
@settings(max_examples=40)
def test_first_derivative_matches_central_differences(p, x):
    space = open_knot_vector(p, uniform_mesh(1.0, 7))
    # keep away from knots so the difference quotient straddles one element
    eps = 1e-6
    if np.min(np.abs(space.mesh.breakpoints - x)) < 10 * eps:
        x += 20 * eps
    _, up = eval_basis(space, x + eps, 0)
    _, um = eval_basis(space, x - eps, 0)
    _, d1 = eval_basis(space, x, 1)
    assert (up - um) / (2 * eps) == pytest.approx(d1, abs=1e-6)


def test_c1_continuity_of_quadratics():
    space = open_knot_vector(2, uniform_mesh(1.5, 6))
    for face in range(1, 6):
        x = float(space.mesh.breakpoints[face])
        for r in (0, 1):
            fl, dl = eval_all_derivatives(space, x, r, side="left")
            fr, dr = eval_all_derivatives(space, x, r, side="right")
            left = np.zeros(space.n_untrimmed)
            right = np.zeros(space.n_untrimmed)
            left[fl:fl + 3] = dl[r]
            right[fr:fr + 3] = dr[r]
            assert left == pytest.approx(right, abs=1e-12)
        # second derivatives jump at simple knots
        assert np.abs(pth_derivative_jumps(space, face)).max() > 1.0


def test_p1_jump_values_uniform():
    h = 0.5
    space = open_knot_vector(1, uniform_mesh(1.0, 4))
    jump = pth_derivative_jumps(space, 2)
    assert jump[2] == pytest.approx(2 / h, abs=1e-12)
    assert jump[1] == pytest.approx(-1 / h, abs=1e-12)
    assert jump[3] == pytest.approx(-1 / h, abs=1e-12)
    # hat at node 2 seen from face 3
    assert pth_derivative_jumps(space, 3)[2] == pytest.approx(-1 / h, abs=1e-12)


def test_jump_oracle_one_sided_differences():
    # independent oracle: difference of one-sided p-th derivative traces
    for p in (1, 2):
        space = open_knot_vector(p, Mesh1D(np.array([-1.0, -0.3, 0.2, 0.65, 1.0])))
        for face in range(1, 4):
            x = float(space.mesh.breakpoints[face])
            dense_l = np.zeros(space.n_untrimmed)
            dense_r = np.zeros(space.n_untrimmed)
            fl, dl = eval_all_derivatives(space, x, p, side="left")
            fr, dr = eval_all_derivatives(space, x, p, side="right")
            dense_l[fl:fl + p + 1] = dl[p]
            dense_r[fr:fr + p + 1] = dr[p]
            assert pth_derivative_jumps(space, face) == pytest.approx(
                dense_l - dense_r, abs=1e-10)


def test_jump_locality():
    space = open_knot_vector(2, uniform_mesh(1.0, 10))
    for face in range(11):
        jump = pth_derivative_jumps(space, face)
        support = np.nonzero(np.abs(jump) > 1e-14)[0]
        assert support.size <= 2 * space.degree + 1
        # only functions whose support touches the face may contribute
        for j in support:
            assert j <= face + space.degree and j + space.degree + 1 >= face


def test_jump_invalid_face():
    space = open_knot_vector(1, uniform_mesh(1.0, 4))
    with pytest.raises(ValueError):
        pth_derivative_jumps(space, 5)
    with pytest.raises(ValueError):
        pth_derivative_jumps(space, -1)


def test_collocation_boundary_trimming():
    space = open_knot_vector(3, uniform_mesh(2.0, 8))
    B = collocation_matrix(space, [-2.0, 2.0])
    assert np.abs(B).max() == pytest.approx(0.0, abs=1e-14)
