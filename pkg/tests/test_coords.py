import math

import numpy as np
import pytest

from swcoulomb import coords
from swcoulomb.coords import (
    CartesianPoint,
    ParabolicPoint,
    SphericalPoint,
    cartesian_to_parabolic,
    cartesian_to_parabolic_array,
    cartesian_to_spherical,
    cartesian_to_spherical_array,
    metric_parabolic,
    metric_parabolic_array,
    metric_spherical,
    metric_spherical_array,
    parabolic_to_cartesian,
    parabolic_to_cartesian_array,
    spherical_to_cartesian,
    spherical_to_cartesian_array,
)
from swcoulomb.errors import DomainError, SingularPointError

HP = coords.HALF_PI


def _angles(rng, m, k):
    return rng.uniform(0.02, HP - 0.02, (m, k))


def test_parabolic_examples():
    x = parabolic_to_cartesian_array([1.0], [1.0], [[0.0]])[0]
    np.testing.assert_allclose(x, [1.0, 0.0, 0.0], atol=1e-15)
    x = parabolic_to_cartesian(ParabolicPoint(2.0, 0.0, (math.pi / 4,)))
    np.testing.assert_allclose(x.x, [0.0, 0.0, 2.0], atol=1e-15)
    x = parabolic_to_cartesian(ParabolicPoint(1.0, 1.0, (math.pi / 4, math.pi / 3)), n=4)
    c4, c3, s3, s4 = math.cos(math.pi / 4), math.cos(math.pi / 3), math.sin(math.pi / 3), math.sin(math.pi / 4)
    np.testing.assert_allclose(x.x, [c4 * c3, c4 * s3, s4, 0.0], atol=1e-15)


def test_parabolic_inverse_near_axis():
    eps = 1e-6
    p = cartesian_to_parabolic(CartesianPoint((1.0, eps, eps)))
    assert p.xi == pytest.approx(1.0, abs=1e-6)
    assert p.eta == pytest.approx(1.0, abs=1e-6)
    assert p.theta[0] == pytest.approx(eps, rel=1e-6)
    p = cartesian_to_parabolic(CartesianPoint((eps, eps, 2.0)))
    assert p.xi == pytest.approx(2.0, rel=1e-12)
    assert p.eta == pytest.approx(math.sqrt(2) * eps / 2.0, rel=1e-9)  # eta = rho/xi, no cancellation


def test_dimension_mismatch():
    with pytest.raises(DomainError):
        parabolic_to_cartesian(ParabolicPoint(1.0, 1.0, (0.3,)), n=4)
    with pytest.raises(DomainError):
        CartesianPoint((1.0, 2.0))


def test_point_validation():
    with pytest.raises(DomainError):
        ParabolicPoint(-1.0, 1.0, (0.3,))
    with pytest.raises(DomainError):
        ParabolicPoint(1.0, 1.0, (0.0,))
    with pytest.raises(DomainError):
        SphericalPoint(1.0, (0.3, HP))


@pytest.mark.parametrize("x", [(0.0, 1.0, 1.0), (1.0, 0.0, -1.0), (-1.0, 1.0, 1.0)])
def test_parabolic_inverse_singular(x):
    with pytest.raises(SingularPointError):
        cartesian_to_parabolic(CartesianPoint(x))


def test_spherical_inverse_singular():
    with pytest.raises(SingularPointError):
        cartesian_to_spherical(CartesianPoint((1.0, 1.0, 0.0)))


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_parabolic_round_trip(n):
    rng = np.random.default_rng(n)
    m = 1000
    xi, eta = rng.uniform(0.05, 5, m), rng.uniform(0.05, 5, m)
    th = _angles(rng, m, n - 2)
    x = parabolic_to_cartesian_array(xi, eta, th)
    xi2, eta2, th2 = cartesian_to_parabolic_array(x)
    np.testing.assert_allclose(xi2, xi, rtol=1e-12)
    np.testing.assert_allclose(eta2, eta, rtol=1e-12)
    np.testing.assert_allclose(th2, th, rtol=1e-12)
    # r = (xi^2 + eta^2)/2
    np.testing.assert_allclose(np.sum(x * x, axis=1), (0.5 * (xi**2 + eta**2)) ** 2, rtol=1e-13)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_spherical_round_trip(n):
    rng = np.random.default_rng(10 + n)
    m = 1000
    r = rng.uniform(0.01, 50, m)
    th = _angles(rng, m, n - 1)
    x = spherical_to_cartesian_array(r, th)
    r2, th2 = cartesian_to_spherical_array(x)
    np.testing.assert_allclose(r2, r, rtol=1e-12)
    np.testing.assert_allclose(th2, th, rtol=1e-12)


def test_spherical_limits():
    eps = 1e-9
    x = spherical_to_cartesian(SphericalPoint(1.0, (eps, 0.7)))
    assert x.x[0] == pytest.approx(1.0, abs=1e-12)
    x = spherical_to_cartesian(SphericalPoint(1.0, (HP - eps, HP - eps)))
    assert x.x[2] == pytest.approx(1.0, abs=1e-12)


def test_metric_examples():
    m = metric_parabolic(ParabolicPoint(1.0, 1.0, (0.4,)))
    np.testing.assert_allclose(m.diagonal, [2.0, 2.0, 1.0])
    assert m.volume_density == pytest.approx(2.0)
    m = metric_parabolic(ParabolicPoint(1.0, 2.0, (math.pi / 3, 0.5)))
    assert m.diagonal[3] == pytest.approx(1.0)
    m = metric_spherical(SphericalPoint(2.0, (HP - 1e-9, 0.3)))
    np.testing.assert_allclose(m.diagonal, [1.0, 4.0, 4.0], rtol=1e-12)
    assert m.volume_density == pytest.approx(4.0)
    m = metric_spherical(SphericalPoint(1.0, (math.pi / 6, 0.8, 0.3)))
    assert m.volume_density == pytest.approx(math.sin(math.pi / 6) ** 2 * math.sin(0.8))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_metric_determinant_consistency(n):
    rng = np.random.default_rng(n)
    xi, eta = rng.uniform(0.1, 3, 50), rng.uniform(0.1, 3, 50)
    diag, sg = metric_parabolic_array(xi, eta, _angles(rng, 50, n - 2))
    np.testing.assert_allclose(sg, np.sqrt(np.prod(diag, axis=1)), rtol=1e-12)
    diag, sg = metric_spherical_array(rng.uniform(0.1, 3, 50), _angles(rng, 50, n - 1))
    np.testing.assert_allclose(sg, np.sqrt(np.prod(diag, axis=1)), rtol=1e-12)
    assert np.all(diag >= 0)


def _num_jacobian(f, q, h=1e-6):
    q = np.asarray(q, dtype=float)
    cols = []
    for i in range(q.size):
        e = np.zeros_like(q)
        e[i] = h
        cols.append((f(q + e) - f(q - e)) / (2 * h))
    return np.array(cols).T


@pytest.mark.parametrize("n", [3, 4, 5])
def test_numerical_jacobian_matches_volume_density(n):
    rng = np.random.default_rng(100 + n)
    for _ in range(10):
        q = np.concatenate([rng.uniform(0.3, 2, 2), rng.uniform(0.1, HP - 0.1, n - 2)])
        f = lambda v: parabolic_to_cartesian_array([v[0]], [v[1]], [v[2:]])[0]
        det = abs(np.linalg.det(_num_jacobian(f, q)))
        _, sg = metric_parabolic_array([q[0]], [q[1]], [q[2:]])
        assert det == pytest.approx(sg[0], rel=1e-6)
        q = np.concatenate([rng.uniform(0.3, 2, 1), rng.uniform(0.1, HP - 0.1, n - 1)])
        f = lambda v: spherical_to_cartesian_array([v[0]], [v[1:]])[0]
        det = abs(np.linalg.det(_num_jacobian(f, q)))
        _, sg = metric_spherical_array([q[0]], [q[1:]])
        assert det == pytest.approx(sg[0], rel=1e-6)


@pytest.mark.parametrize("n", [3, 5])
def test_metric_matches_pullback(n):
    # g = J^T J must be diagonal with the stated entries
    rng = np.random.default_rng(7)
    q = np.concatenate([rng.uniform(0.3, 2, 2), rng.uniform(0.1, HP - 0.1, n - 2)])
    f = lambda v: parabolic_to_cartesian_array([v[0]], [v[1]], [v[2:]])[0]
    J = _num_jacobian(f, q)
    g = J.T @ J
    diag, _ = metric_parabolic_array([q[0]], [q[1]], [q[2:]])
    np.testing.assert_allclose(np.diag(g), diag[0], rtol=1e-7)
    assert np.max(np.abs(g - np.diag(np.diag(g)))) < 1e-7 * np.max(diag)
    q = np.concatenate([rng.uniform(0.3, 2, 1), rng.uniform(0.1, HP - 0.1, n - 1)])
    f = lambda v: spherical_to_cartesian_array([v[0]], [v[1:]])[0]
    J = _num_jacobian(f, q)
    diag, _ = metric_spherical_array([q[0]], [q[1:]])
    np.testing.assert_allclose(np.diag(J.T @ J), diag[0], rtol=1e-7)
