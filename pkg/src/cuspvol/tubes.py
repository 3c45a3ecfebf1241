"""Closed-form geometry of loxodromic isometries and their tubes.

A loxodromic isometry of hyperbolic 3-space is described by its translation
length ``l > 0`` and twist angle ``theta``.  For a point at distance ``r``
from the axis the displacement ``d`` satisfies

    cosh d = cosh l + sinh(r)^2 * (cosh l - cos theta),

and every formula below is a rearrangement of that identity chosen so the
results stay accurate when ``l`` is tiny, which is exactly the regime where
short-geodesic tubes are interesting.  The subtraction-free building blocks
are ``cosh l - cos theta = 2 (sinh(l/2)^2 + sin(theta/2)^2)`` and
``arccosh(1 + delta) = log1p(delta + sqrt(delta (delta + 2)))``.
"""

import math
from dataclasses import dataclass

__all__ = [
    "Loxodromic",
    "collar_radius",
    "displacement_at_radius",
    "exit_radius",
    "tube_radius",
    "tube_volume",
]

_TWO_PI = 2.0 * math.pi


def _acosh1p(delta):
    """arccosh(1 + delta) without cancellation for small delta >= 0."""
    if delta < 0.0:
        raise ValueError(f"arccosh argument below 1: delta={delta}")
    return math.log1p(delta + math.sqrt(delta * (delta + 2.0)))


@dataclass(frozen=True)
class Loxodromic:
    """A loxodromic isometry: translation length and twist angle.

    The twist is normalized into (-pi, pi] on construction.
    """

    length: float
    twist: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.length) and self.length > 0.0):
            raise ValueError(f"translation length must be positive and finite, got {self.length}")
        if not math.isfinite(self.twist):
            raise ValueError(f"twist must be finite, got {self.twist}")
        reduced = math.remainder(self.twist, _TWO_PI)
        if reduced <= -math.pi:
            reduced += _TWO_PI
        object.__setattr__(self, "twist", reduced)

    def cosh_excess(self):
        """cosh(length) - cos(twist), computed without cancellation."""
        return 2.0 * (math.sinh(self.length / 2.0) ** 2 + math.sin(self.twist / 2.0) ** 2)


def displacement_at_radius(iso, radius):
    """Distance a point at ``radius`` from the axis is moved by ``iso``.

    Increases strictly from ``iso.length`` at radius 0.
    """
    if radius < 0.0:
        raise ValueError(f"radius must be nonnegative, got {radius}")
    half = iso.length / 2.0
    delta = 2.0 * math.sinh(half) ** 2 + math.sinh(radius) ** 2 * iso.cosh_excess()
    return _acosh1p(delta)


def tube_radius(iso, target):
    """Radius of the open tube on which ``iso`` moves points less than ``target``.

    Returns None when no such tube exists (``target <= iso.length``, so even
    the axis is displaced at least ``target``).  Uses
    cosh(target) - cosh(l) = 2 sinh((target+l)/2) sinh((target-l)/2).
    """
    if not math.isfinite(target):
        raise ValueError(f"target displacement must be finite, got {target}")
    if target <= iso.length:
        return None
    gap = 2.0 * math.sinh((target + iso.length) / 2.0) * math.sinh((target - iso.length) / 2.0)
    return math.asinh(math.sqrt(gap / iso.cosh_excess()))


def collar_radius(length):
    """Radius at which the displacement weight of the core pair drops to 1/2.

    Solves 1/(1 + e^length) + 1/(1 + e^(2 r)) = 1/2 for r, which gives
    r = (1/2) log((e^length + 3)/(e^length - 1)); positive iff length < log 3.
    """
    if length <= 0.0:
        raise ValueError(f"length must be positive, got {length}")
    return 0.5 * math.log((math.exp(length) + 3.0) / math.expm1(length))


def exit_radius(tube_radius, length):
    """Half of arccosh(cosh(2 R) cosh(l / 2)) for a radius-R tube.

    Hypotenuse radius pairing the tube diameter with half the core length;
    the tube-constrained separation budget uses twice this value as one of
    its known displacements.
    """
    if tube_radius < 0.0:
        raise ValueError(f"tube radius must be nonnegative, got {tube_radius}")
    if length <= 0.0:
        raise ValueError(f"length must be positive, got {length}")
    half = length / 2.0
    # cosh(2R) cosh(l/2) - 1, grouped to avoid cancellation near 0.
    delta = 2.0 * math.sinh(tube_radius) ** 2 * math.cosh(half) + 2.0 * math.sinh(half / 2.0) ** 2
    return 0.5 * _acosh1p(delta)


def tube_volume(length, radius):
    """Volume pi * length * sinh(radius)^2 of the radius-``radius`` tube."""
    if length <= 0.0:
        raise ValueError(f"length must be positive, got {length}")
    if radius < 0.0:
        raise ValueError(f"radius must be nonnegative, got {radius}")
    return math.pi * length * math.sinh(radius) ** 2
