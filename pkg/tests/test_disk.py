import cmath
import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.integrate import quad

from horomax import disk as D
from horomax.disk import DISK, BoundaryClampError, DiskIdealPoint, DiskPoint
from horomax.space import INFINITY, DegenerateLineError, ModelMismatchError, gromov_product
from horomax.tree import TREE

import oracles

radius = st.floats(0, 3)
angle = st.floats(0, 2 * math.pi)


@st.composite
def points(draw, r=radius):
    return DISK.apply(D.rotation(draw(angle)), D._diameter_point(draw(r)))


ideals = angle.map(DiskIdealPoint)


def test_distance_examples():
    o = DISK.origin
    assert DISK.distance(o, o) == 0
    assert DISK.distance(o, DiskPoint(0.5)) == pytest.approx(math.log(3), abs=1e-15)


def test_distance_by_integrating_the_metric():
    # hyperbolic length of the diameter from 0 to 0.5
    length, _ = quad(lambda t: 2.0 / (1.0 - t * t), 0.0, 0.5, epsabs=1e-14)
    assert DISK.distance(DISK.origin, DiskPoint(0.5)) == pytest.approx(length, abs=1e-12)
    # midpoint doubling
    half = DiskPoint(math.tanh(0.25 * math.log(9) / 2))
    assert DISK.distance(DISK.origin, DiskPoint(0.5)) == pytest.approx(2 * DISK.distance(DISK.origin, half), abs=1e-14)


@given(points(), points())
def test_distance_matches_mpmath_oracle(x, y):
    assert DISK.distance(x, y) == pytest.approx(float(oracles.disk_distance(x.z, y.z)), abs=1e-11)


def test_clamp_is_an_error():
    with pytest.raises(BoundaryClampError):
        DiskPoint(1 - 1e-13)
    with pytest.raises(BoundaryClampError):
        DiskPoint(1.5j)


def test_exact_gap_near_the_circle():
    p = D._diameter_point(26.0)
    assert p.gap == pytest.approx(1 / math.cosh(13.0) ** 2, rel=1e-14)
    assert DISK.distance(DISK.origin, p) == pytest.approx(26.0, abs=1e-12)


def test_model_mismatch():
    with pytest.raises(ModelMismatchError):
        DISK.distance(DISK.origin, TREE.origin)


def test_busemann_examples():
    o = DISK.origin
    xi = DiskIdealPoint(0)
    assert DISK.busemann(o, xi, o) == 0
    assert DISK.busemann(o, xi, DiskPoint(0.5)) == pytest.approx(-math.log(3), abs=1e-15)
    assert DISK.busemann(o, xi, DiskPoint(-0.5)) == pytest.approx(math.log(3), abs=1e-15)


@given(points(st.floats(0, 2)), ideals, points(st.floats(0, 2)))
def test_busemann_matches_high_precision_closed_form(p, xi, x):
    exact = oracles.disk_busemann_exact(p.z, xi.theta, x.z)
    assert DISK.busemann(p, xi, x) == pytest.approx(float(exact), abs=1e-12)


def test_busemann_limit_definition_at_t30():
    rng = np.random.default_rng(3)
    for _ in range(20):
        p = DISK.apply(D.rotation(rng.uniform(0, 6.3)), D._diameter_point(rng.uniform(0, 2)))
        x = DISK.apply(D.rotation(rng.uniform(0, 6.3)), D._diameter_point(rng.uniform(0, 2)))
        xi = DiskIdealPoint(rng.uniform(0, 6.3))
        lim = oracles.disk_busemann_limit(p.z, xi.theta, x.z, 30)
        assert abs(DISK.busemann(p, xi, x) - float(lim)) <= 2 * math.exp(-30) + 1e-8


@given(points(), points(), ideals)
def test_busemann_antisymmetry_and_lipschitz(p, y, xi):
    assert DISK.busemann(p, xi, y) == pytest.approx(-DISK.busemann(y, xi, p), abs=1e-9)
    assert abs(DISK.busemann(p, xi, y) - DISK.busemann(p, xi, p)) <= DISK.distance(p, y) + 1e-9


def test_gromov_product_ideal_examples():
    o = DISK.origin
    assert DISK.gromov_product_ideal(DiskIdealPoint(0), DiskIdealPoint(math.pi), o) == pytest.approx(0, abs=1e-15)
    assert DISK.gromov_product_ideal(DiskIdealPoint(0), DiskIdealPoint(math.pi / 2), o) == pytest.approx(0.5 * math.log(2), abs=1e-15)
    assert DISK.gromov_product_ideal(DiskIdealPoint(1.0), DiskIdealPoint(1.0), o) is INFINITY


@given(ideals, ideals, points(st.floats(0, 2)))
def test_gromov_product_ideal_is_limit_of_point_products(xi, eta, base):
    if DISK.visual_distance(xi, eta) < 0.05:
        return
    t = 18.0
    x, y = DISK.ray(DISK.origin, xi)(t), DISK.ray(DISK.origin, eta)(t)
    assert gromov_product(x, y, base) == pytest.approx(DISK.gromov_product_ideal(xi, eta, base), abs=1e-9)


def test_gromov_product_points():
    x, y = DiskPoint(0.5), DiskPoint(-0.5)
    assert gromov_product(x, y, DISK.origin) == pytest.approx(0, abs=1e-15)
    assert gromov_product(x, x, DiskPoint(0.3j)) == pytest.approx(DISK.distance(DiskPoint(0.3j), x))


def test_ray_and_midpoint_examples():
    r = DISK.ray(DISK.origin, DiskIdealPoint(0))
    for t in (0.0, 0.7, 5.0, 20.0):
        assert abs(r(t).z - math.tanh(t / 2)) < 1e-15
    assert abs(DISK.midpoint(DiskPoint(0.5), DiskPoint(-0.5)).z) < 1e-16
    x = DiskPoint(0.2 + 0.1j)
    assert DISK.distance(DISK.midpoint(x, x), x) < 1e-15
    assert DISK.segment(x, x).length == 0


@given(points(), points(), st.floats(0, 1), st.floats(0, 1))
def test_segments_are_unit_speed(x, y, a, b):
    seg = DISK.segment(x, y)
    s, t = a * seg.length, b * seg.length
    assert DISK.distance(seg(s), seg(t)) == pytest.approx(abs(s - t), abs=1e-9)
    assert DISK.distance(seg(0), x) < 1e-9 and DISK.distance(seg(seg.length), y) < 1e-9


@given(points(), points())
def test_midpoint_equidistant(x, y):
    m = DISK.midpoint(x, y)
    assert DISK.distance(m, x) == pytest.approx(DISK.distance(m, y), abs=1e-9)


@given(points(), ideals, st.floats(0, 15), st.floats(0, 15))
def test_rays_are_unit_speed_and_converge(p, xi, s, t):
    r = DISK.ray(p, xi)
    assert DISK.distance(r(s), r(t)) == pytest.approx(abs(s - t), abs=1e-8)
    assert DISK.busemann(p, xi, r(t)) == pytest.approx(-t, abs=1e-8)


def test_geodesic_line_examples():
    line = DISK.geodesic_line(DiskIdealPoint(0), DiskIdealPoint(math.pi))
    for t in (-3.0, 0.0, 1.0, 4.0):
        assert abs(line.point(t).z - math.tanh(t / 2)) < 1e-15
    theta = 1.1
    line = DISK.geodesic_line(DiskIdealPoint(theta), DiskIdealPoint(theta + math.pi))
    assert abs(line.point(2.0).z - math.tanh(1.0) * cmath.exp(1j * theta)) < 1e-15
    with pytest.raises(DegenerateLineError):
        DISK.geodesic_line(DiskIdealPoint(1.0), DiskIdealPoint(1.0))


@given(ideals, ideals, st.floats(-8, 8), st.floats(-8, 8))
def test_geodesic_lines(a, b, s, t):
    if DISK.visual_distance(a, b) < 1e-3:
        return
    line = DISK.geodesic_line(a, b)
    assert DISK.distance(line.point(s), line.point(t)) == pytest.approx(abs(s - t), abs=1e-8)
    # the base point is the point of the line nearest 0, where the ideal product vanishes
    assert DISK.gromov_product_ideal(a, b, line.base_point) == pytest.approx(0, abs=1e-9)
    assert DISK.distance(DISK.origin, line.base_point) <= DISK.distance(DISK.origin, line.point(s)) + 1e-12
    if DISK.visual_distance(a, b) > 0.1:
        assert DISK.point_visual_distance(line.point(20.0), a) < 1e-5
        assert DISK.point_visual_distance(line.point(-20.0), b) < 1e-5


def test_isometry_examples():
    ident = DISK.identity()
    x = DiskPoint(0.3 - 0.2j)
    assert abs(DISK.apply(ident, x).z - x.z) < 1e-16
    rot = D.rotation(0.4)
    assert DISK.apply(rot, DiskIdealPoint(1.0)).theta == pytest.approx(1.4)
    t = D.translation(1.7)
    assert DISK.ideal_equal(DISK.apply(t, DiskIdealPoint(0)), DiskIdealPoint(0))
    assert DISK.ideal_equal(DISK.apply(t, DiskIdealPoint(math.pi)), DiskIdealPoint(math.pi))
    attracting, repelling = DISK.fixed_points(t)
    assert attracting.theta == pytest.approx(0, abs=1e-12) and repelling.theta == pytest.approx(math.pi)


@st.composite
def isometries(draw):
    g = D.translation(draw(st.floats(0, 4)), draw(angle))
    return DISK.compose(g, D.rotation(draw(angle)))


@given(isometries(), points(), points())
def test_isometries_preserve_distance(g, x, y):
    assert abs(g.determinant - 1) < 1e-9
    assert DISK.distance(DISK.apply(g, x), DISK.apply(g, y)) == pytest.approx(DISK.distance(x, y), abs=1e-8)
    assert DISK.isometries_equal(DISK.compose(g, DISK.inverse(g)), DISK.identity())


@given(isometries(), points(st.floats(0, 2)), ideals)
def test_busemann_is_equivariant(g, x, xi):
    o = DISK.origin
    lhs = DISK.busemann(DISK.apply(g, o), DISK.apply(g, xi), DISK.apply(g, x))
    assert lhs == pytest.approx(DISK.busemann(o, xi, x), abs=1e-8)


def test_orbit_distance_beyond_clamp():
    g = D.translation(60.0, 0.3)
    x = DiskPoint(0.1)
    # exact value from the hyperboloid oracle at high precision
    a, b = mp.cosh(30), mp.sinh(30) * mp.expj(0.3)
    z = mp.mpf(0.1)
    gx = (a * z + b) / (mp.conj(b) * z + a)
    expected = oracles.disk_distance(0, gx)
    assert DISK.orbit_distance(g, x) == pytest.approx(float(expected), rel=1e-12)
