"""Simplicial packing density of equal balls in hyperbolic 3-space.

For a packing by balls of radius ``r``, the sharp local bound on the
fraction of space covered is attained on a regular simplex of edge ``2 r``
with balls centered at its vertices.  This module computes the profile of
that simplex: the volume of a ball, the vertex-to-face distance chain, the
dihedral angle ``beta(r) = arcsec(sech 2r + 2)``, the simplex volume

    tau(r) = 3 * integral of arcsech(sec t - 2) for t from beta(r) to arcsec 3,

and the density

    d(r) = (3 beta(r) - pi) * (sinh 2r - 2r) / tau(r),

which increases to the horoball limit d_inf = sqrt(3) / (2 V), where V is
the volume of the regular ideal simplex.  All angle differences and inverse
hyperbolic chains are evaluated in subtraction-free form: at ``r = 12`` the
density must be resolved to better than 1e-10 for the monotonicity
certification, far beyond what the naive expressions deliver.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

from scipy.integrate import quad
from scipy.special import zeta

__all__ = [
    "LimitConstants",
    "SimplexPackingProfile",
    "angle_excess",
    "ball_volume",
    "cell_volume",
    "cell_volume_via_angle",
    "cusp_volume_bound",
    "density",
    "dihedral_angle",
    "ideal_cell_volume",
    "limit_constants",
    "lobachevsky",
    "packing_profile",
    "thick_point_volume",
]

#: Dihedral angle of the Euclidean regular tetrahedron, the r -> 0 limit.
APEX_ANGLE = math.acos(1.0 / 3.0)

_SQRT3 = math.sqrt(3.0)
_HALF_LOG3 = 0.5 * math.log(3.0)
#: Terms of the Lobachevsky series carry a factor (theta/pi)^(2n) <= 4^-n,
#: so 60 terms are far more than double precision can use.
_LOBACHEVSKY_MAX_TERMS = 60


class QuadratureError(ArithmeticError):
    """Raised when the simplex-volume quadrature cannot meet its tolerance."""


def lobachevsky(theta):
    """The Lobachevsky function, pi-periodic and odd.

    Evaluated by the zeta series
    L(x) = x - x log|2x| + x * sum_{n>=1} zeta(2n)/(n (2n+1)) (x/pi)^(2n)
    after reduction to |x| <= pi/2, where the ratio between consecutive
    terms is at most 1/4.
    """
    if not math.isfinite(theta):
        raise ValueError(f"angle must be finite, got {theta}")
    x = math.remainder(theta, math.pi)
    if x == 0.0 or abs(x) == 0.5 * math.pi:
        return 0.0
    ratio = (x / math.pi) ** 2
    power = ratio
    total = 0.0
    for n in range(1, _LOBACHEVSKY_MAX_TERMS + 1):
        term = zeta(2 * n) / (n * (2 * n + 1)) * power
        total += term
        if term < 1e-18:
            break
        power *= ratio
    # scipy's zeta returns numpy scalars; keep the result a plain float.
    return float(x * (1.0 - math.log(abs(2.0 * x))) + x * total)


@lru_cache(maxsize=1)
def ideal_cell_volume():
    """Volume of the regular ideal simplex, 2 L(pi/6) = 3 L(pi/3) = 1.01494..."""
    return 2.0 * lobachevsky(math.pi / 6.0)


def _sinh_minus_identity(x):
    """sinh(x) - x without cancellation (series below 1, direct above)."""
    if abs(x) >= 1.0:
        return math.sinh(x) - x
    total = 0.0
    term = x**3 / 6.0
    k = 3
    while True:
        total += term
        term *= x * x / ((k + 1) * (k + 2))
        k += 2
        if abs(term) < 1e-20 * (abs(total) + 1e-300):
            return total


def ball_volume(r):
    """Volume pi (sinh 2r - 2r) of the radius-r ball."""
    if r < 0.0:
        raise ValueError(f"radius must be nonnegative, got {r}")
    return math.pi * _sinh_minus_identity(2.0 * r)


def dihedral_angle(r):
    """Dihedral angle beta(r) = arccos(1/(2 + sech 2r)) of the edge-2r simplex.

    Decreases from arcsec 3 (r -> 0) to pi/3 (ideal limit).
    """
    if r < 0.0:
        raise ValueError(f"radius must be nonnegative, got {r}")
    return math.acos(1.0 / (2.0 + 1.0 / math.cosh(2.0 * r)))


def angle_excess(r):
    """3 beta(r) - pi, without the catastrophic cancellation at large r.

    With eps = sech 2r the exact rearrangement is
    3 arcsin(eps (4 + eps) / (2 (2 + eps) (sqrt(3 + 4 eps + eps^2) + sqrt 3))),
    which keeps full relative accuracy while the naive difference loses
    everything beyond eps ~ 1e-8.
    """
    if r < 0.0:
        raise ValueError(f"radius must be nonnegative, got {r}")
    eps = 1.0 / math.cosh(2.0 * r)
    numerator = eps * (4.0 + eps)
    denominator = 2.0 * (2.0 + eps) * (math.sqrt(3.0 + eps * (4.0 + eps)) + _SQRT3)
    return 3.0 * math.asin(numerator / denominator)


def _ridge_gauge(t):
    """Angle-form integrand arcsech(sec t - 2) = arccosh(cos t / (1 - 2 cos t))."""
    c = math.cos(t)
    return math.acosh(c / (1.0 - 2.0 * c))


def _arc_gauge(s):
    """Arclength-form integrand, the image of _ridge_gauge under s = arcsech(sec t - 2)."""
    u = 1.0 / math.cosh(s)
    w = 2.0 + u
    return s * u * math.tanh(s) / (w * math.sqrt(w * w - 1.0))


def _checked_quad(fn, lower, upper, quad_tol, label):
    value, estimate = quad(fn, lower, upper, epsabs=quad_tol, epsrel=quad_tol, limit=200, full_output=1)[:2]
    if estimate > 100.0 * max(quad_tol, 1e-14) * max(1.0, abs(value)):
        raise QuadratureError(f"{label} quadrature stalled: error estimate {estimate}")
    return value


def cell_volume(r, quad_tol=1e-10):
    """Volume tau(r) of the regular simplex with edge 2r.

    Increasing in r with ideal limit ideal_cell_volume().  Evaluated in the
    arclength variable s = arcsech(sec t - 2), where the integrand

        s sech(s) tanh(s) / ((2 + sech s) sqrt((2 + sech s)^2 - 1))

    over [0, 2r] is smooth and exponentially decaying; the angle form has
    an inverse-square-root endpoint singularity that caps adaptive
    quadrature near 1e-9 absolute error, not enough to resolve the density
    increments certified at large r.  The error estimate is checked against
    quad_tol; failure raises QuadratureError rather than silently degrading.
    """
    if r <= 0.0:
        raise ValueError(f"edge half-length must be positive, got {r}")
    return 3.0 * _checked_quad(_arc_gauge, 0.0, 2.0 * r, quad_tol, f"simplex volume (r={r})")


def cell_volume_via_angle(r, quad_tol=1e-9):
    """tau(r) by the defining angle integral, as an independent cross-check.

    3 * integral of arcsech(sec t - 2) for t from dihedral_angle(r) to
    arcsec 3.  Accurate to roughly quad_tol down to its roundoff floor near
    1e-9; cell_volume is the precise evaluation.
    """
    if r <= 0.0:
        raise ValueError(f"edge half-length must be positive, got {r}")
    return 3.0 * _checked_quad(_ridge_gauge, dihedral_angle(r), APEX_ANGLE, quad_tol, f"angle form (r={r})")


def density(r, quad_tol=1e-10):
    """Simplicial density d(r) = (3 beta - pi)(sinh 2r - 2r) / tau(r)."""
    return angle_excess(r) * _sinh_minus_identity(2.0 * r) / cell_volume(r, quad_tol)


def _stable_atanh_chain(leg, base):
    """arctanh((cosh leg cosh base - 1)/(sinh leg cosh base)), in log form.

    Equal to (1/2) log((e^leg cosh base - 1)/(1 - e^-leg cosh base)); the
    naive arctanh loses half its digits once the argument is within 1e-8
    of 1, which happens already for moderate r.
    """
    ch = math.cosh(base)
    return 0.5 * math.log((math.exp(leg) * ch - 1.0) / (1.0 - math.exp(-leg) * ch))


@dataclass(frozen=True)
class SimplexPackingProfile:
    """Geometry of the regular simplex with edge 2 * radius.

    face_altitude and apex_distance are the vertex-to-opposite-side
    distances inside a face and inside the simplex; face_circumradius and
    circumradius are the center-to-vertex distances of a face and of the
    simplex.  shell_gap = circumradius - radius is the part of the
    circumscribed ball not covered by the packing ball, with ideal limit
    log sqrt(3/2).
    """

    radius: float
    ball_volume: float
    face_altitude: float
    face_circumradius: float
    apex_distance: float
    circumradius: float
    dihedral_angle: float
    cell_volume: float
    density: float
    shell_gap: float


def packing_profile(r, quad_tol=1e-10):
    """Full packing profile at ball radius r (one quadrature per call)."""
    if r <= 0.0:
        raise ValueError(f"radius must be positive, got {r}")
    cosh_edge = math.cosh(2.0 * r)
    face_altitude = math.acosh(cosh_edge / math.cosh(r))
    face_circumradius = _stable_atanh_chain(face_altitude, r)
    apex_distance = math.acosh(cosh_edge / math.cosh(face_circumradius))
    circumradius = _stable_atanh_chain(apex_distance, face_circumradius)
    cell = cell_volume(r, quad_tol)
    ball = ball_volume(r)
    return SimplexPackingProfile(
        radius=r,
        ball_volume=ball,
        face_altitude=face_altitude,
        face_circumradius=face_circumradius,
        apex_distance=apex_distance,
        circumradius=circumradius,
        dihedral_angle=dihedral_angle(r),
        cell_volume=cell,
        density=angle_excess(r) * (ball / math.pi) / cell,
        shell_gap=circumradius - r,
    )


@dataclass(frozen=True)
class LimitConstants:
    """Derived constants of the volume bound.

    circumradius_scale   e^(circumradius at r = (log 3)/2), exactly sqrt(2 + sqrt 3)
    collar_ball_bound    thick_point_volume((log 3)/2), the one-point volume floor
    density_limit        horoball packing density, sqrt(3)/(2 ideal_cell_volume)
    shell_gap_limit      ideal shell gap, log sqrt(3/2)
    ideal_cell_volume    regular ideal simplex volume
    """

    circumradius_scale: float
    collar_ball_bound: float
    density_limit: float
    shell_gap_limit: float
    ideal_cell_volume: float


@lru_cache(maxsize=None)
def limit_constants(quad_tol=1e-10):
    """Compute the derived constants at the given quadrature tolerance.

    density_limit is taken as d(12) after checking stabilization over
    r in {8, 10, 12} and agreement with the closed form to 1e-5; both
    failures raise rather than degrade.
    """
    base = packing_profile(_HALF_LOG3, quad_tol)
    d8 = density(8.0, quad_tol)
    d10 = density(10.0, quad_tol)
    d12 = density(12.0, quad_tol)
    if abs(d10 - d8) > 1e-6 or abs(d12 - d10) > 1e-6:
        raise ArithmeticError(f"density has not stabilized: d(8)={d8!r} d(10)={d10!r} d(12)={d12!r}")
    ideal = ideal_cell_volume()
    closed_form = _SQRT3 / (2.0 * ideal)
    if abs(d12 - closed_form) > 1e-5:
        raise ArithmeticError(f"density limit {d12!r} disagrees with closed form {closed_form!r}")
    return LimitConstants(
        circumradius_scale=math.exp(base.circumradius),
        collar_ball_bound=base.ball_volume / base.density,
        density_limit=d12,
        shell_gap_limit=0.5 * math.log(1.5),
        ideal_cell_volume=ideal,
    )


def thick_point_volume(r, quad_tol=1e-10):
    """Volume forced by one point of injectivity radius >= r: B(r)/d(r)."""
    return ball_volume(r) / density(r, quad_tol)


def cusp_volume_bound(cusp_volume, quad_tol=1e-10):
    """Manifold volume forced by a cusp neighborhood of the given volume."""
    if cusp_volume <= 0.0:
        raise ValueError(f"cusp volume must be positive, got {cusp_volume}")
    return cusp_volume / limit_constants(quad_tol).density_limit
