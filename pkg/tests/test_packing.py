import math

import mpmath as mp
import numpy as np
import pytest

from cuspvol.packing import (
    angle_excess,
    ball_volume,
    cell_volume,
    cell_volume_via_angle,
    cusp_volume_bound,
    density,
    dihedral_angle,
    ideal_cell_volume,
    limit_constants,
    lobachevsky,
    packing_profile,
    thick_point_volume,
)

HALF_LOG3 = 0.5 * math.log(3.0)


def test_limit_constants_frozen():
    c = limit_constants(1e-10)
    assert c.circumradius_scale == pytest.approx(1.9318516525781364, abs=5e-16)
    assert c.collar_ball_bound == pytest.approx(0.9297813075926348, rel=1e-12)
    assert c.density_limit == pytest.approx(0.8532760881046086, rel=1e-12)
    assert c.shell_gap_limit == pytest.approx(0.2027325540540822, abs=1e-14)
    assert c.ideal_cell_volume == pytest.approx(1.0149416064096537, abs=1e-15)


def test_limit_constants_cached():
    assert limit_constants(1e-10) is limit_constants(1e-10)


def test_circumradius_scale_closed_form():
    # the limiting circumradius scale is sqrt(2 + sqrt 3); allow one ulp
    c = limit_constants(1e-10)
    assert c.circumradius_scale == pytest.approx(math.sqrt(2.0 + math.sqrt(3.0)), abs=5e-16)


def test_density_limit_closed_form():
    c = limit_constants(1e-10)
    assert c.density_limit == pytest.approx(math.sqrt(3.0) / (2.0 * c.ideal_cell_volume), abs=1e-9)


def test_ball_volume_closed_form():
    mp.mp.dps = 40
    for r in (1e-6, 1e-3, 0.3, 1.0, 5.0):
        want = float(mp.pi * (mp.sinh(2 * mp.mpf(r)) - 2 * mp.mpf(r)))
        assert ball_volume(r) == pytest.approx(want, rel=1e-15, abs=1e-300)


def test_ball_volume_collar_value():
    # B((log 3)/2) = pi (4/3 - log 3) exactly
    assert ball_volume(HALF_LOG3) == pytest.approx(math.pi * (4.0 / 3.0 - math.log(3.0)), abs=1e-15)
    assert ball_volume(HALF_LOG3) == pytest.approx(0.7373979095631877, abs=1e-15)


def test_ball_volume_tiny_radius_series():
    # sinh(2r) - 2r ~ (2r)^3/6: naive subtraction would return 0.0 here
    assert ball_volume(1e-8) == pytest.approx(math.pi * (2e-8) ** 3 / 6.0, rel=1e-12)


def test_lobachevsky_against_clausen():
    mp.mp.dps = 40
    for theta in (0.05, 0.3, math.pi / 6.0, math.pi / 3.0, 1.2, 2.0, 3.0):
        want = float(0.5 * mp.clsin(2, 2 * mp.mpf(theta)))
        assert lobachevsky(theta) == pytest.approx(want, abs=2e-16, rel=1e-13)


def test_lobachevsky_symmetries():
    assert lobachevsky(0.0) == 0.0
    assert lobachevsky(math.pi / 2.0) == pytest.approx(0.0, abs=1e-16)
    for theta in (0.2, 0.9, 1.4):
        assert lobachevsky(-theta) == pytest.approx(-lobachevsky(theta), abs=1e-16)
        assert lobachevsky(theta + math.pi) == pytest.approx(lobachevsky(theta), abs=1e-15)


def test_ideal_cell_volume_frozen():
    assert ideal_cell_volume() == pytest.approx(1.0149416064096537, abs=1e-15)
    # trisection identity: 2 L(pi/6) = 3 L(pi/3)
    assert 2.0 * lobachevsky(math.pi / 6.0) == pytest.approx(3.0 * lobachevsky(math.pi / 3.0), abs=1e-15)


def test_dihedral_angle_frozen_and_bounds():
    assert dihedral_angle(0.3) == pytest.approx(1.2114386636081844, abs=1e-15)
    grid = np.linspace(0.05, 10.0, 200)
    angles = [dihedral_angle(float(r)) for r in grid]
    assert all(b < a for a, b in zip(angles, angles[1:]))  # decreasing
    assert all(math.pi / 3.0 < a < math.acos(1.0 / 3.0) for a in angles)


def test_angle_excess_matches_difference():
    for r in (0.05, 0.5, 1.0, 3.0, 8.0):
        assert angle_excess(r) == pytest.approx(3.0 * dihedral_angle(r) - math.pi, abs=1e-15)


def test_angle_excess_stable_at_large_radius():
    # naive 3 beta - pi is pure cancellation noise out here
    assert angle_excess(20.0) > 0.0
    assert angle_excess(20.0) == pytest.approx(3.0 * math.asin(1.0 / (2.0 * math.cosh(40.0) + 1.0)), rel=1e-10)


def test_cell_volume_against_high_precision():
    mp.mp.dps = 30

    def mp_cell(r):
        def integrand(s):
            sech = 1 / mp.cosh(s)
            denom = (2 + sech) * mp.sqrt((2 + sech) ** 2 - 1)
            return s * sech * mp.tanh(s) / denom

        return 3 * mp.quad(integrand, [0, 2 * mp.mpf(r)])

    for r in (0.3, 2.0):
        assert cell_volume(r, 1e-12) == pytest.approx(float(mp_cell(r)), abs=1e-13)


def test_cell_volume_frozen_value():
    assert cell_volume(HALF_LOG3, 1e-10) == pytest.approx(0.11436519364702016, rel=1e-12)


def test_cell_volume_two_forms_agree():
    for r in (0.3, HALF_LOG3, 2.0, 6.0):
        assert cell_volume(r, 1e-10) == pytest.approx(cell_volume_via_angle(r, 1e-9), abs=1e-7)


def test_cell_volume_ideal_limit():
    assert cell_volume(12.0, 1e-10) == pytest.approx(ideal_cell_volume(), abs=1e-5)


def test_density_frozen_values():
    assert density(1.0, 1e-10) == pytest.approx(0.8127651897774865, rel=1e-12)
    assert density(HALF_LOG3, 1e-10) == pytest.approx(0.7930874750240343, rel=1e-12)


def test_density_increasing_coarse():
    grid = np.linspace(0.05, 12.0, 60)
    values = [density(float(r), 1e-10) for r in grid]
    assert all(b > a for a, b in zip(values, values[1:]))


def test_density_cell_identity():
    for r in (0.1, 0.7, 2.0, 9.0):
        lhs = density(r, 1e-10) * cell_volume(r, 1e-10)
        rhs = angle_excess(r) * ball_volume(r) / math.pi
        assert lhs == pytest.approx(rhs, abs=1e-12)


def test_packing_profile_frozen():
    p = packing_profile(HALF_LOG3, 1e-10)
    assert p.radius == HALF_LOG3
    assert p.ball_volume == pytest.approx(0.7373979095631877, abs=1e-15)
    assert p.face_altitude == pytest.approx(0.9099541672687633, abs=1e-14)
    assert p.face_circumradius == pytest.approx(0.6251451172504167, abs=1e-14)
    assert p.apex_distance == pytest.approx(0.8533592018823145, abs=1e-14)
    assert p.circumradius == pytest.approx(0.6584789484624083, abs=1e-14)
    assert p.dihedral_angle == pytest.approx(1.176005207095135, abs=1e-14)
    assert p.cell_volume == pytest.approx(0.11436519364702016, rel=1e-12)
    assert p.density == pytest.approx(0.7930874750240343, rel=1e-12)
    assert p.shell_gap == pytest.approx(0.1091728041283534, abs=1e-14)


def test_profile_shell_gap_relation():
    p = packing_profile(HALF_LOG3, 1e-10)
    assert p.shell_gap == pytest.approx(p.circumradius - p.radius, abs=1e-15)


def test_shell_gap_ideal_limit():
    p = packing_profile(12.0, 1e-10)
    assert p.shell_gap == pytest.approx(0.5 * math.log(1.5), abs=1e-6)


def test_thick_point_volume_identity():
    assert thick_point_volume(1.0, 1e-10) == pytest.approx(6.288326284135676, rel=1e-12)
    assert thick_point_volume(1.0, 1e-10) == pytest.approx(
        ball_volume(1.0) / density(1.0, 1e-10), rel=1e-14
    )


def test_cusp_volume_bound_identity():
    c = limit_constants(1e-10)
    assert cusp_volume_bound(1.0, 1e-10) == pytest.approx(1.0 / c.density_limit, rel=1e-14)
    assert cusp_volume_bound(2.5, 1e-10) == pytest.approx(2.5 / c.density_limit, rel=1e-14)


def test_validation_errors():
    with pytest.raises(ValueError):
        ball_volume(-0.1)
    with pytest.raises(ValueError):
        cell_volume(0.0, 1e-10)
    with pytest.raises(ValueError):
        cell_volume(-1.0, 1e-10)
    with pytest.raises(ValueError):
        density(1.0, -1e-10)
    with pytest.raises(ValueError):
        dihedral_angle(-0.2)
    with pytest.raises(ValueError):
        cusp_volume_bound(-1.0, 1e-10)
