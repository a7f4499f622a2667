import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from softiga.meshing import (GradedMeshSpec, gauss_rule, graded_mesh,
                             map_rule_to_mesh, uniform_mesh)


def test_uniform_mesh_examples():
    assert uniform_mesh(20.0, 80).element_sizes == pytest.approx(np.full(80, 0.5))
    assert uniform_mesh(20.0, 4000).element_sizes == pytest.approx(np.full(4000, 0.01))
    assert uniform_mesh(1.0, 1).breakpoints.tolist() == [-1.0, 1.0]


def test_uniform_mesh_validation():
    with pytest.raises(ValueError):
        uniform_mesh(0.0, 10)
    with pytest.raises(ValueError):
        uniform_mesh(1.0, 0)


def test_graded_mesh_zero_growth_is_uniform():
    a = graded_mesh(GradedMeshSpec(20.0, 80, 0.0)).breakpoints
    b = uniform_mesh(20.0, 80).breakpoints
    assert np.array_equal(a, b)


def test_graded_mesh_ratio_example():
    # arithmetic progression s, 2s with 3s = 2 on each half
    mesh = graded_mesh(GradedMeshSpec(2.0, 4, 1.0))
    sizes = mesh.element_sizes
    assert sizes[2:] == pytest.approx([2 / 3, 4 / 3], abs=1e-14)
    assert sizes[2] / sizes[3] == pytest.approx(0.5, abs=1e-14)
    assert mesh.breakpoints == pytest.approx([-2.0, -2 / 3, 0.0, 2 / 3, 2.0])


def test_graded_mesh_validation():
    with pytest.raises(ValueError):
        graded_mesh(GradedMeshSpec(1.0, 5, 0.1))
    with pytest.raises(ValueError):
        graded_mesh(GradedMeshSpec(1.0, 4, -0.1))


@given(st.floats(min_value=0.5, max_value=30.0),
       st.integers(min_value=1, max_value=30),
       st.floats(min_value=0.0, max_value=2.0))
def test_graded_mesh_properties(x_eps, half_n, growth):
    mesh = graded_mesh(GradedMeshSpec(x_eps, 2 * half_n, growth))
    bp = mesh.breakpoints
    assert np.abs(bp + bp[::-1]).max() <= 1e-12 * x_eps
    assert mesh.element_sizes.sum() == pytest.approx(2 * x_eps, abs=1e-12 * x_eps)
    # sizes non-decreasing from the center outward
    right = mesh.element_sizes[half_n:]
    assert np.all(np.diff(right) >= -1e-12)


def test_gauss_rule_examples():
    r1 = gauss_rule(1)
    assert r1.nodes == pytest.approx([0.0])
    assert r1.weights == pytest.approx([2.0])
    r2 = gauss_rule(2)
    assert sorted(r2.nodes) == pytest.approx([-1 / np.sqrt(3), 1 / np.sqrt(3)])
    assert r2.weights == pytest.approx([1.0, 1.0])
    r5 = gauss_rule(5)
    assert np.sum(r5.weights * r5.nodes ** 8) == pytest.approx(2 / 9, abs=1e-12)


def test_gauss_rule_validation():
    for q in (0, 31):
        with pytest.raises(ValueError):
            gauss_rule(q)


@given(st.integers(min_value=1, max_value=12))
def test_gauss_weights_sum(q):
    rule = gauss_rule(q)
    assert rule.weights.sum() == pytest.approx(2.0, abs=1e-14)
    assert np.all(rule.weights > 0)
    assert np.all((rule.nodes > -1) & (rule.nodes < 1))


@given(st.integers(min_value=1, max_value=10), st.data())
def test_gauss_polynomial_exactness(q, data):
    # exact for monomials up to degree 2q-1
    degree = data.draw(st.integers(min_value=0, max_value=2 * q - 1))
    rule = gauss_rule(q)
    approx = np.sum(rule.weights * rule.nodes ** degree)
    exact = 0.0 if degree % 2 == 1 else 2.0 / (degree + 1)
    assert approx == pytest.approx(exact, abs=1e-12)


def test_map_rule_covers_elements():
    mesh = graded_mesh(GradedMeshSpec(3.0, 6, 0.5))
    rule = gauss_rule(4)
    pts, wts = map_rule_to_mesh(mesh, rule)
    assert pts.shape == (6, 4)
    assert wts.sum() == pytest.approx(6.0, abs=1e-12)
    for e in range(6):
        lo, hi = mesh.breakpoints[e], mesh.breakpoints[e + 1]
        assert np.all((pts[e] > lo) & (pts[e] < hi))
