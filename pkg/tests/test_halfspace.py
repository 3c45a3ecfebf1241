import cmath
import math

import numpy as np
import pytest

from cuspvol.halfspace import (
    ModelIsometry,
    ModelPoint,
    horoball_distance,
    horoball_distance_to_infinity,
    model_distance,
    oracle_displacement,
)
from cuspvol.tubes import Loxodromic, displacement_at_radius


def test_vertical_segment_distance():
    # along the vertical axis the metric is dt/t
    p = ModelPoint(0j, 1.0)
    q = ModelPoint(0j, math.e)
    assert model_distance(p, q) == pytest.approx(1.0, abs=1e-15)


def test_distance_symmetric():
    rng = np.random.default_rng(3)
    for _ in range(50):
        p = ModelPoint(complex(*rng.uniform(-2, 2, 2)), float(rng.uniform(0.05, 3.0)))
        q = ModelPoint(complex(*rng.uniform(-2, 2, 2)), float(rng.uniform(0.05, 3.0)))
        assert model_distance(p, q) == pytest.approx(model_distance(q, p), abs=1e-15)


def test_axis_offset_point():
    # (tanh r, sech r) sits at distance exactly r from the vertical axis point (0, 1)
    for r in (0.1, 0.5, 1.0, 2.5):
        p = ModelPoint(complex(math.tanh(r), 0.0), 1.0 / math.cosh(r))
        assert model_distance(ModelPoint(0j, 1.0), p) == pytest.approx(r, rel=1e-14)


def _random_isometry(rng):
    # normalize a random complex matrix to determinant one
    while True:
        a, b, c, d = (complex(*rng.uniform(-1.5, 1.5, 2)) for _ in range(4))
        det = a * d - b * c
        if abs(det) > 1e-2:
            s = 1.0 / cmath.sqrt(det)
            return ModelIsometry(a * s, b * s, c * s, d * s)


def test_isometries_preserve_distance():
    rng = np.random.default_rng(5)
    for _ in range(100):
        iso = _random_isometry(rng)
        p = ModelPoint(complex(*rng.uniform(-2, 2, 2)), float(rng.uniform(0.1, 2.0)))
        q = ModelPoint(complex(*rng.uniform(-2, 2, 2)), float(rng.uniform(0.1, 2.0)))
        assert model_distance(iso.apply(p), iso.apply(q)) == pytest.approx(
            model_distance(p, q), rel=1e-11, abs=1e-11
        )


def test_inverse_round_trip():
    rng = np.random.default_rng(9)
    for _ in range(50):
        iso = _random_isometry(rng)
        p = ModelPoint(complex(*rng.uniform(-2, 2, 2)), float(rng.uniform(0.1, 2.0)))
        back = iso.inverse().apply(iso.apply(p))
        assert back.z == pytest.approx(p.z, abs=1e-12)
        assert back.height == pytest.approx(p.height, abs=1e-12)


def test_composition_matches_sequential_application():
    rng = np.random.default_rng(13)
    f = _random_isometry(rng)
    g = _random_isometry(rng)
    p = ModelPoint(0.3 + 0.4j, 0.8)
    combined = (f @ g).apply(p)
    sequential = f.apply(g.apply(p))
    assert combined.z == pytest.approx(sequential.z, abs=1e-13)
    assert combined.height == pytest.approx(sequential.height, abs=1e-13)


def test_loxodromic_axis_translation():
    iso = ModelIsometry.from_loxodromic(Loxodromic(0.6, 0.0))
    moved = iso.apply(ModelPoint(0j, 1.0))
    assert moved.z == pytest.approx(0j, abs=1e-15)
    assert moved.height == pytest.approx(math.exp(0.6), rel=1e-15)


def test_oracle_matches_closed_form():
    rng = np.random.default_rng(17)
    for _ in range(300):
        iso = Loxodromic(float(rng.uniform(1e-3, 3.0)), float(rng.uniform(-math.pi, math.pi)))
        radius = float(rng.uniform(0.0, 3.0))
        assert oracle_displacement(iso, radius) == pytest.approx(
            displacement_at_radius(iso, radius), abs=1e-9
        )


def test_barycenter_equidistant_from_four_horoballs():
    # apex of the ideal regular simplex on vertices 0, 1, (1+i sqrt 3)/2, infinity
    center = ModelPoint(complex(0.5, math.sqrt(3.0) / 6.0), math.sqrt(2.0 / 3.0))
    distances = [
        horoball_distance_to_infinity(center, 1.0),
        horoball_distance(center, 0.0, 1.0),
        horoball_distance(center, 1.0, 1.0),
        horoball_distance(center, complex(0.5, math.sqrt(3.0) / 2.0), 1.0),
    ]
    for d in distances:
        assert d == pytest.approx(0.2027325540540821, abs=1e-15)
    assert max(distances) - min(distances) < 1e-15
    assert distances[0] == pytest.approx(0.5 * math.log(1.5), abs=1e-15)


def test_horoball_distance_sign():
    tall = ModelPoint(0j, 3.0)
    low = ModelPoint(0j, 0.2)
    assert horoball_distance(tall, 0.0, 1.0) > 0.0  # outside
    assert horoball_distance(low, 0.0, 1.0) < 0.0  # inside
    assert horoball_distance(ModelPoint(0j, 1.0), 0.0, 1.0) == pytest.approx(0.0, abs=1e-15)
    assert horoball_distance_to_infinity(ModelPoint(5 + 5j, 2.0), 1.0) < 0.0


def test_validation():
    with pytest.raises(ValueError):
        ModelPoint(0j, 0.0)
    with pytest.raises(ValueError):
        ModelPoint(0j, -1.0)
    with pytest.raises(ValueError):
        ModelIsometry(1.0, 0.0, 0.0, 2.0)  # determinant 2
