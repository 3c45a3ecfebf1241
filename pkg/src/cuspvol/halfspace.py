"""Upper-half-space model of hyperbolic 3-space.

Points are (z, t) with z complex and t > 0.  An isometry is a unimodular
2x2 complex matrix acting on the boundary by z -> (a z + b)/(c z + d) and
extended to the interior in the standard way.  This module is the slow,
explicit oracle used to certify the closed forms in :mod:`cuspvol.tubes`:
the two paths share no trigonometric identities, only the metric itself.
"""

import cmath
import math
from dataclasses import dataclass

from cuspvol.tubes import Loxodromic

__all__ = [
    "ModelIsometry",
    "ModelPoint",
    "horoball_distance",
    "horoball_distance_to_infinity",
    "model_distance",
    "oracle_displacement",
]

_DET_TOLERANCE = 1e-12


@dataclass(frozen=True)
class ModelPoint:
    z: complex
    height: float

    def __post_init__(self):
        if not (math.isfinite(self.height) and self.height > 0.0):
            raise ValueError(f"height must be positive and finite, got {self.height}")


@dataclass(frozen=True)
class ModelIsometry:
    """Unimodular matrix [[a, b], [c, d]]; determinant must be 1 up to 1e-12."""

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        det = self.a * self.d - self.b * self.c
        if abs(det - 1.0) >= _DET_TOLERANCE:
            raise ValueError(f"matrix is not unimodular: det={det}")

    @classmethod
    def from_loxodromic(cls, iso: Loxodromic):
        """Standard form with axis the vertical line over z = 0."""
        w = complex(iso.length / 2.0, iso.twist / 2.0)
        return cls(cmath.exp(w), 0.0, 0.0, cmath.exp(-w))

    def inverse(self):
        return ModelIsometry(self.d, -self.b, -self.c, self.a)

    def __matmul__(self, other):
        return ModelIsometry(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def apply(self, point: ModelPoint) -> ModelPoint:
        """Poincare extension of the boundary Mobius map."""
        cz_d = self.c * point.z + self.d
        den = abs(cz_d) ** 2 + abs(self.c) ** 2 * point.height**2
        z = ((self.a * point.z + self.b) * cz_d.conjugate() + self.a * self.c.conjugate() * point.height**2) / den
        return ModelPoint(z, point.height / den)


def model_distance(p: ModelPoint, q: ModelPoint) -> float:
    """Hyperbolic distance, cosh d = 1 + (|z1-z2|^2 + (t1-t2)^2) / (2 t1 t2)."""
    delta = (abs(p.z - q.z) ** 2 + (p.height - q.height) ** 2) / (2.0 * p.height * q.height)
    return math.log1p(delta + math.sqrt(delta * (delta + 2.0)))


def horoball_distance(p: ModelPoint, tangency: complex, diameter: float) -> float:
    """Signed distance from p to the horoball tangent at ``tangency``.

    The horoball is the Euclidean ball of the given diameter resting on the
    boundary plane; negative values mean p is inside.
    """
    if diameter <= 0.0:
        raise ValueError(f"diameter must be positive, got {diameter}")
    return math.log((abs(p.z - tangency) ** 2 + p.height**2) / (diameter * p.height))


def horoball_distance_to_infinity(p: ModelPoint, cut_height: float) -> float:
    """Signed distance from p to the horoball {t >= cut_height}."""
    if cut_height <= 0.0:
        raise ValueError(f"cut height must be positive, got {cut_height}")
    return math.log(cut_height / p.height)


def oracle_displacement(iso: Loxodromic, radius: float) -> float:
    """Displacement at distance ``radius`` from the axis, via the matrix model.

    The point (tanh r, sech r) lies at distance r from the axis over z = 0;
    its image is computed by the Poincare extension and the distance by the
    metric formula, independently of any closed-form displacement identity.
    """
    if radius < 0.0:
        raise ValueError(f"radius must be nonnegative, got {radius}")
    point = ModelPoint(complex(math.tanh(radius), 0.0), 1.0 / math.cosh(radius))
    return model_distance(point, ModelIsometry.from_loxodromic(iso).apply(point))
