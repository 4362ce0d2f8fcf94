import numpy as np
import pytest

from minkcenters import (Simplex, centroid, euclid_is_orthocentric,
                         euclid_orthocenter, face_centroid, quasi_median)
from minkcenters.simplex import opposite_edge, ridge_edge_pairs
from minkcenters.verify import random_simplex

TRIRECT = Simplex([[0, 0, 0], [2, 0, 0], [0, 2, 0], [0, 0, 2]])


def test_degenerate_rejected():
    with pytest.raises(ValueError, match="general position"):
        Simplex([[0, 0], [1, 0], [2, 0]])


def test_centroid_examples():
    assert np.allclose(centroid(Simplex([[0, 0], [1, 0], [0, 1]])), (1 / 3, 1 / 3))
    assert np.allclose(centroid(TRIRECT), (0.5, 0.5, 0.5))
    regular = Simplex([[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]])
    assert np.allclose(centroid(regular), (0, 0, 0))


def test_face_centroids():
    assert np.allclose(face_centroid(TRIRECT, [1, 2, 3]), (2 / 3, 2 / 3, 2 / 3))
    assert np.allclose(face_centroid(TRIRECT, [0, 1]), (1, 0, 0))
    assert np.allclose(face_centroid(TRIRECT, [2, 3]), (0, 1, 1))


def test_invalid_faces():
    with pytest.raises(ValueError):
        face_centroid(TRIRECT, [])
    with pytest.raises(ValueError):
        face_centroid(TRIRECT, [0, 0, 1])
    with pytest.raises(ValueError):
        face_centroid(TRIRECT, [0, 9])


def test_quasi_median_endpoints():
    qm = quasi_median(TRIRECT, [2, 3])
    assert np.allclose(qm.a, (0, 1, 1))
    assert np.allclose(qm.b, (1, 0, 0))


def test_quasi_median_is_median_for_triangles():
    T = Simplex([[0, 0], [1, 0], [0, 1]])
    qm = quasi_median(T, [2])
    assert np.allclose(qm.a, (0, 1))
    assert np.allclose(qm.b, (0.5, 0))  # opposite edge midpoint


def test_centroid_divides_quasi_medians():
    # ratio 2:(d-1), with the 2-part at the ridge-centroid end
    rng = np.random.default_rng(7)
    for d in range(2, 7):
        T = random_simplex(d, rng)
        G = centroid(T)
        for ridge, _ in ridge_edge_pairs(T):
            qm = quasi_median(T, ridge)
            u = qm.b - qm.a
            t = (G - qm.a) @ u / (u @ u)
            assert abs(t - 2 / (d + 1)) <= 1e-10
            # off-segment residual
            assert np.linalg.norm(G - (qm.a + t * u)) <= 1e-10 * T.diameter


def test_centroid_affine_equivariant():
    rng = np.random.default_rng(8)
    for d in (2, 3, 4):
        T = random_simplex(d, rng)
        A = rng.normal(size=(d, d)) + 2 * np.eye(d)
        b = rng.normal(size=d)
        phiT = Simplex(T.vertices @ A.T + b)
        assert np.allclose(centroid(phiT), A @ centroid(T) + b, atol=1e-10)


def test_opposite_edge():
    assert opposite_edge(TRIRECT, (2, 3)) == (0, 1)


class TestOrthocentricity:
    def test_trirectangular(self):
        assert euclid_is_orthocentric(TRIRECT)

    def test_corner_orthogonal_scaled(self):
        T = Simplex([[0, 0, 0], [3, 0, 0], [0, 2, 0], [0, 0, 2]])
        assert euclid_is_orthocentric(T)

    def test_generic_not_orthocentric(self):
        rng = np.random.default_rng(9)
        T = random_simplex(3, rng)
        assert not euclid_is_orthocentric(T)

    def test_triangles_always(self):
        rng = np.random.default_rng(10)
        assert euclid_is_orthocentric(random_simplex(2, rng))


class TestOrthocenter:
    def test_trirectangular_orthocenter_at_corner(self):
        assert np.allclose(euclid_orthocenter(TRIRECT), (0, 0, 0), atol=1e-9)

    def test_right_triangle(self):
        T = Simplex([[0, 0], [1, 0], [0, 1]])
        assert np.allclose(euclid_orthocenter(T), (0, 0), atol=1e-9)

    def test_non_orthocentric_none(self):
        rng = np.random.default_rng(11)
        assert euclid_orthocenter(random_simplex(3, rng)) is None
