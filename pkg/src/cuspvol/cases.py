"""Piecewise volume optimization over the maximal-cusp parameter beta.

A maximal cusp neighborhood of volume (pi/2) beta forces manifold volume
pi beta / d_inf through the packing-density bound; for beta < 2 the bound
is improved by exhibiting extra geometry at distance

    remote_radius(beta) = -(1/2) log((3/2)(beta - 1))

from the cusp.  Which improvement applies depends on how remote_radius
compares with the thresholds 0, (log 3)/2, log C1, log C1 + log 3 (C1 the
circumradius scale), giving five branches over beta in (1, 2) plus the
trivial branch beta >= 2.  Each branch value is a closed form in the
packing constants; this module evaluates them, classifies beta, and sweeps
the whole range for the global minimum.

The fourth branch (case IVA) is documented here exactly as computed: its
value split_case_value decreases to an interior minimum near x = 0.0617
(beta = 1.0617) and then increases.  The classical claim that it decreases
throughout x < 3/8, backed by claimed_slope_cubic, does not hold; the
certification checks exhibit the counterexample rather than hiding it.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum

from cuspvol.packing import LimitConstants, ball_volume

__all__ = [
    "CaseAnalysisReport",
    "CaseBound",
    "CaseId",
    "CaseSummary",
    "HEADLINE_FLOOR",
    "analyze_cases",
    "case_intervals",
    "case_volume_bound",
    "claimed_case_floors",
    "claimed_slope_cubic",
    "classify_case",
    "collar_case_minimum",
    "collar_case_slope",
    "collar_case_value",
    "collar_slope_quadratic",
    "remote_radius",
    "split_ball_radius",
    "split_case_slope",
    "split_case_value",
    "split_slope_cubic",
    "stationary_argument",
    "sweep_bounds",
]

#: Every branch infimum is asserted to exceed this value; the certification
#: suite tests the assertion instead of assuming it.
HEADLINE_FLOOR = 5.06

_HALF_LOG3 = 0.5 * math.log(3.0)
_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
_INV_PHI2 = (3.0 - math.sqrt(5.0)) / 2.0


class CaseId(str, Enum):
    CUSP_LARGE = "CUSP_LARGE"
    I = "I"
    II = "II"
    III = "III"
    IVA = "IVA"
    IVB = "IVB"


@dataclass(frozen=True)
class CaseBound:
    case_id: CaseId
    beta_interval: tuple
    bound_value: float
    formula_tag: str


@dataclass(frozen=True)
class CaseSummary:
    """One branch of the sweep: its interval, infimum, and where it sits.

    attained is False when the infimum is only approached at an excluded
    endpoint of the half-open interval; argmin_beta is then that endpoint.
    claimed_floor is the branch's closed-form floor from
    claimed_case_floors, recorded for side-by-side comparison.
    """

    case_id: CaseId
    beta_interval: tuple
    infimum: float
    argmin_beta: float
    attained: bool
    claimed_floor: float
    formula_tag: str


@dataclass(frozen=True)
class CaseAnalysisReport:
    constants: LimitConstants
    grid_step: float
    per_case: tuple
    global_min: float
    global_case: CaseId
    global_argmin_beta: float


def remote_radius(beta):
    """Clearance radius -(1/2) log((3/2)(beta - 1)); zero at beta = 5/3."""
    if not 1.0 < beta < 2.0:
        raise ValueError(f"beta must lie in (1, 2), got {beta}")
    return -0.5 * math.log(1.5 * (beta - 1.0))


def split_ball_radius(beta, constants):
    """Half the clearance left after the circumradius scale is spent."""
    return 0.5 * (remote_radius(beta) - math.log(constants.circumradius_scale))


def case_intervals(constants):
    """Half-open beta intervals [lo, hi) per case; IVB is open at 1.

    The thresholds are the remote_radius crossings of 0, (log 3)/2,
    log C1, log C1 + log 3, rewritten as beta values.
    """
    scale2 = constants.circumradius_scale**2
    beta_iva = 1.0 + 2.0 / (27.0 * scale2)
    beta_iii = 1.0 + 2.0 / (3.0 * scale2)
    return {
        CaseId.IVB: (1.0, beta_iva),
        CaseId.IVA: (beta_iva, beta_iii),
        CaseId.III: (beta_iii, 11.0 / 9.0),
        CaseId.II: (11.0 / 9.0, 5.0 / 3.0),
        CaseId.I: (5.0 / 3.0, 2.0),
        CaseId.CUSP_LARGE: (2.0, math.inf),
    }


def classify_case(beta, constants):
    """Branch containing beta; beta >= 2 maps to CUSP_LARGE."""
    if beta <= 1.0:
        raise ValueError(f"beta must exceed 1, got {beta}")
    if beta >= 2.0:
        return CaseId.CUSP_LARGE
    intervals = case_intervals(constants)
    for case_id in (CaseId.I, CaseId.II, CaseId.III, CaseId.IVA):
        if beta >= intervals[case_id][0]:
            return case_id
    return CaseId.IVB


def collar_case_value(x, constants):
    """Branch II bound as a function of x = beta - 1:

    pi ((x + 1)/d_inf - (3/4) x + 1/(3 x) + log((3/2) x)),
    equal to pi beta / d_inf + ball_volume(remote_radius(beta)).
    """
    if x <= 0.0:
        raise ValueError(f"x must be positive, got {x}")
    d_inf = constants.density_limit
    return math.pi * ((x + 1.0) / d_inf - 0.75 * x + 1.0 / (3.0 * x) + math.log(1.5 * x))


def collar_slope_quadratic(y, constants):
    """q(y) = -(1/3) y^2 + y + (1/d_inf - 3/4); slope is pi q(1/x)."""
    return -(y * y) / 3.0 + y + (1.0 / constants.density_limit - 0.75)


def collar_case_slope(x, constants):
    """Derivative of collar_case_value, pi * q(1/x)."""
    if x <= 0.0:
        raise ValueError(f"x must be positive, got {x}")
    return math.pi * collar_slope_quadratic(1.0 / x, constants)


def stationary_argument(constants):
    """The unique stationary point x* = 2/(3 (1 + sqrt(4/(3 d_inf))))."""
    return 2.0 / (3.0 * (1.0 + math.sqrt(4.0 / (3.0 * constants.density_limit))))


def collar_case_minimum(constants):
    """(x*, collar_case_value(x*)): the branch II interior minimum."""
    x = stationary_argument(constants)
    return x, collar_case_value(x, constants)


def split_case_value(x, constants):
    """Branch IVA bound as a function of x = beta - 1:

    (pi/2) (C1^-1 ((3/2) x)^(-1/2) - C1 ((3/2) x)^(1/2) + log((3/2) x)
            + 2 log C1 + (2/d_inf)(x + 1)) + C2,

    equal to C2 + pi beta / d_inf + ball_volume(split_ball_radius(beta)).
    Decreases to an interior minimum near x = 0.0617, then increases.
    """
    if x <= 0.0:
        raise ValueError(f"x must be positive, got {x}")
    scale = constants.circumradius_scale
    root = math.sqrt(1.5 * x)
    return (
        0.5
        * math.pi
        * (
            1.0 / (scale * root)
            - scale * root
            + math.log(1.5 * x)
            + 2.0 * math.log(scale)
            + 2.0 * (x + 1.0) / constants.density_limit
        )
        + constants.collar_ball_bound
    )


def split_case_slope(x, constants):
    """Derivative of split_case_value, term by term:

    (pi/2) (-(3/4) C1^-1 ((3/2) x)^(-3/2) - (3/4) C1 ((3/2) x)^(-1/2)
            + 1/x + 2/d_inf).

    Equals (pi/2) split_slope_cubic(sqrt(3/(2 x))); its unique positive
    zero sits near x = 0.0617.
    """
    if x <= 0.0:
        raise ValueError(f"x must be positive, got {x}")
    scale = constants.circumradius_scale
    root = math.sqrt(1.5 * x)
    return (
        0.5
        * math.pi
        * (-0.75 / (scale * root**3) - 0.75 * scale / root + 1.0 / x + 2.0 / constants.density_limit)
    )


def split_slope_cubic(y, constants):
    """Cubic with (pi/2) split_slope_cubic(sqrt(3/(2x))) = split_case_slope(x):

    -(2/9) C1^-1 y^3 + (2/3) y^2 - (1/2) C1 y + 2/d_inf.
    """
    scale = constants.circumradius_scale
    return -2.0 / 9.0 * y**3 / scale + 2.0 / 3.0 * y * y - 0.5 * scale * y + 2.0 / constants.density_limit


def claimed_slope_cubic(y, constants):
    """The cubic historically paired with the branch IVA slope:

    c(y) = -(3/4) C1^-1 y^3 + (2/3) y^2 - (3/4) C1 y + 2/d_inf.

    c is negative for all y >= 2 (a true property, see the checks module),
    but the pairing slope = (pi/2) c(sqrt(3/(2x))) is NOT satisfied by
    split_case_value; the actual derivative follows split_slope_cubic.
    Both cubics are exposed so the certification can exhibit the mismatch.
    """
    scale = constants.circumradius_scale
    return -0.75 * y**3 / scale + 2.0 / 3.0 * y * y - 0.75 * scale * y + 2.0 / constants.density_limit


def _cusp_only(beta, constants):
    return math.pi * beta / constants.density_limit


def _branch_function(case_id, constants):
    collar_ball = ball_volume(_HALF_LOG3)
    if case_id == CaseId.CUSP_LARGE:
        return lambda beta: 2.0 * math.pi / constants.density_limit
    if case_id == CaseId.I:
        return lambda beta: _cusp_only(beta, constants)
    if case_id == CaseId.II:
        return lambda beta: collar_case_value(beta - 1.0, constants)
    if case_id == CaseId.III:
        return lambda beta: _cusp_only(beta, constants) + collar_ball
    if case_id == CaseId.IVA:
        return lambda beta: split_case_value(beta - 1.0, constants)
    if case_id == CaseId.IVB:
        return lambda beta: constants.collar_ball_bound + _cusp_only(beta, constants) + collar_ball
    raise ValueError(f"unknown case {case_id}")


_FORMULA_TAGS = {
    CaseId.CUSP_LARGE: "cusp_half_density",
    CaseId.I: "cusp_only",
    CaseId.II: "cusp_plus_remote_ball",
    CaseId.III: "cusp_plus_collar_ball",
    CaseId.IVA: "shell_plus_split_ball",
    CaseId.IVB: "shell_plus_collar_ball",
}


def case_volume_bound(beta, constants):
    """Volume bound at beta, evaluated on the branch that classify_case picks."""
    case_id = classify_case(beta, constants)
    value = _branch_function(case_id, constants)(beta)
    return CaseBound(
        case_id=case_id,
        beta_interval=case_intervals(constants)[case_id],
        bound_value=value,
        formula_tag=_FORMULA_TAGS[case_id],
    )


def claimed_case_floors(constants):
    """Closed-form branch floors as classically asserted.

    These are the endpoint (or stationary-point) evaluations of each branch
    formula.  For every branch except IVA the value is the true infimum;
    for IVA it is the right-endpoint value, which the sweep shows is NOT
    the branch infimum.
    """
    d_inf = constants.density_limit
    scale2 = constants.circumradius_scale**2
    collar_ball = ball_volume(_HALF_LOG3)
    beta_iii = 1.0 + 2.0 / (3.0 * scale2)
    return {
        CaseId.CUSP_LARGE: 2.0 * math.pi / d_inf,
        CaseId.I: math.pi * (5.0 / 3.0) / d_inf,
        CaseId.II: collar_case_minimum(constants)[1],
        CaseId.III: math.pi * beta_iii / d_inf + collar_ball,
        CaseId.IVA: math.pi * beta_iii / d_inf + constants.collar_ball_bound,
        CaseId.IVB: constants.collar_ball_bound + math.pi / d_inf + collar_ball,
    }


def _golden_minimize(fn, lower, upper, tol=1e-12):
    """Golden-section minimum of a unimodal fn on [lower, upper]."""
    a, b = lower, upper
    h = b - a
    if h <= tol:
        mid = 0.5 * (a + b)
        return mid, fn(mid)
    c = a + _INV_PHI2 * h
    d = a + _INV_PHI * h
    fc, fd = fn(c), fn(d)
    steps = int(math.ceil(math.log(tol / h) / math.log(_INV_PHI))) if h > tol else 0
    for _ in range(max(steps, 0)):
        if fc < fd:
            b, d, fd = d, c, fc
            h *= _INV_PHI
            c = a + _INV_PHI2 * h
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            h *= _INV_PHI
            d = a + _INV_PHI * h
            fd = fn(d)
    x = c if fc < fd else d
    return x, fn(x)


def _summarize_case(case_id, constants, grid_step):
    lo, hi, = case_intervals(constants)[case_id][:2]
    closed_left = case_id not in (CaseId.IVB,)
    fn = _branch_function(case_id, constants)
    if case_id == CaseId.CUSP_LARGE:
        value = fn(2.0)
        return CaseSummary(case_id, (lo, hi), value, 2.0, True, value, _FORMULA_TAGS[case_id])
    start = lo if closed_left else lo + grid_step
    count = max(int(math.floor((hi - start) / grid_step)) + 1, 2)
    grid = [start + i * grid_step for i in range(count)]
    grid = [b for b in grid if b < hi] or [start]
    values = [fn(b) for b in grid]
    best = min(range(len(grid)), key=values.__getitem__)
    bracket_lo = grid[best - 1] if best > 0 else lo
    bracket_hi = grid[best + 1] if best + 1 < len(grid) else hi
    x, fx = _golden_minimize(fn, bracket_lo, bracket_hi)
    # Adjudicate against the interval closure: branch formulas extend
    # continuously to both endpoints, and half-open ends are only approached.
    candidates = [(fx, x, True), (fn(lo), lo, closed_left), (fn(hi), hi, False)]
    infimum, argmin, attained = min(candidates, key=lambda item: item[0])
    return CaseSummary(
        case_id=case_id,
        beta_interval=(lo, hi),
        infimum=infimum,
        argmin_beta=argmin,
        attained=attained,
        claimed_floor=claimed_case_floors(constants)[case_id],
        formula_tag=_FORMULA_TAGS[case_id],
    )


def sweep_bounds(constants, beta_min, beta_max, step, threads=1):
    """Pointwise bound along a beta grid: list of (beta, CaseBound).

    The grid is beta_min, beta_min + step, ... up to beta_max inclusive
    (within float fuzz); results are gathered in grid order regardless of
    threads.
    """
    if not beta_min > 1.0:
        raise ValueError(f"beta_min must exceed 1, got {beta_min}")
    if not beta_max >= beta_min:
        raise ValueError(f"beta_max must be >= beta_min, got {beta_max}")
    if not 0.0 < step <= beta_max - beta_min + 1e-12:
        raise ValueError(f"step must be positive and fit the range, got {step}")
    count = int(math.floor((beta_max - beta_min) / step + 1e-9)) + 1
    grid = [beta_min + i * step for i in range(count)]
    grid = [b for b in grid if b <= beta_max + 1e-12]
    evaluate = lambda beta: (beta, case_volume_bound(beta, constants))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(evaluate, grid))
    return [evaluate(beta) for beta in grid]


def analyze_cases(constants, grid_step=1e-4, threads=1):
    """Sweep all branches and report per-case infima and the global minimum.

    The global minimum is over beta in (1, 2); the CUSP_LARGE row is
    reported alongside but cannot compete (its value is the largest bound).
    Grid scan at grid_step followed by golden-section refinement inside the
    bracketing grid cell, with half-open endpoints adjudicated explicitly.
    """
    if not 0.0 < grid_step <= 1e-3:
        raise ValueError(f"grid step must lie in (0, 1e-3], got {grid_step}")
    order = (CaseId.IVB, CaseId.IVA, CaseId.III, CaseId.II, CaseId.I, CaseId.CUSP_LARGE)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            summaries = list(pool.map(lambda case: _summarize_case(case, constants, grid_step), order))
    else:
        summaries = [_summarize_case(case, constants, grid_step) for case in order]
    finite = [s for s in summaries if s.case_id != CaseId.CUSP_LARGE]
    champion = min(finite, key=lambda s: s.infimum)
    return CaseAnalysisReport(
        constants=constants,
        grid_step=grid_step,
        per_case=tuple(summaries),
        global_min=champion.infimum,
        global_case=champion.case_id,
        global_argmin_beta=champion.argmin_beta,
    )
