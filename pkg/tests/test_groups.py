import math
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from horomax import sampling as S
from horomax.checks import boundary_image
from horomax.disk import DISK, DiskIdealPoint, DiskPoint
from horomax.geodesics import ParamGeodesic, apply_to_geodesic, f
from horomax.groups import (
    OCTAGON_CIRCUMRADIUS,
    OCTAGON_INRADIUS,
    CompactRegion,
    UnsupportedRegionError,
    act_on_boundary,
    brute_force_ball_survivors,
    cocompactness_check,
    free_group_action,
    limit_set_sample,
    octagon_group,
    power_stream,
    proper_discontinuity_report,
    target_limit,
    target_seed,
    uncovered_points,
)
from horomax.product import ProductPoint, Regular, Singular
from horomax.tree import TREE, TreeIdealPoint, TreeIsometry, TreePoint

OCT = octagon_group()
FREE = free_group_action()
o = TREE.origin
seeds = st.integers(0, 2**32 - 1)


def test_octagon_constants():
    # regular octagon with interior angles pi/4: cosh(inradius) = cot(pi/8), cosh(R) = cot^2(pi/8)
    cot = 1 / math.tan(math.pi / 8)
    assert math.cosh(OCTAGON_INRADIUS) == pytest.approx(cot)
    assert math.cosh(OCTAGON_CIRCUMRADIUS) == pytest.approx(cot * cot)
    # angle sum of the octagon: area (8 - 2) pi - 8 * pi/4 = 4 pi, genus 2
    assert (8 - 2) * math.pi - 8 * (math.pi / 4) == pytest.approx(4 * math.pi)


def test_octagon_certificate():
    assert max(OCT.relator_defects()) <= 1e-9
    assert len(OCT.generators) == 8
    for letter, g in OCT.generators.items():
        assert g.is_hyperbolic()
        assert abs(g.trace) > 2
    # axes of a, b, c, d are the diameters through opposite side midpoints
    for k, letter in enumerate("abcd"):
        attracting, repelling = DISK.fixed_points(OCT.generators[letter])
        assert DISK.visual_distance(attracting, DiskIdealPoint(k * math.pi / 4)) < 1e-12
        assert DISK.visual_distance(repelling, DiskIdealPoint(k * math.pi / 4 + math.pi)) < 1e-12
        # each generator moves 0 across the side at distance inradius
        assert DISK.orbit_distance(OCT.generators[letter], DISK.origin) == pytest.approx(2 * OCTAGON_INRADIUS)


def test_octagon_vertex_is_equidistant_from_adjacent_centers():
    # the vertex between sides 0 and 1 lies on the bisector of 0 and a(0)
    v = DISK.ray(DISK.origin, DiskIdealPoint(math.pi / 8))(OCTAGON_CIRCUMRADIUS)
    assert DISK.distance(v, DISK.apply(OCT.generators["a"], DISK.origin)) == pytest.approx(OCTAGON_CIRCUMRADIUS)


def test_ball_sizes():
    assert [len(FREE.ball(r)) for r in range(4)] == [1, 5, 17, 53]
    assert len(OCT.ball(0)) == 1
    assert len(OCT.ball(1)) == 9
    # no coincidences before the relator length: 1 + 8 * 7^(k-1) new elements at each length k < 4
    assert len(OCT.ball(3)) == 1 + 8 + 56 + 392


def test_free_group_basics():
    assert FREE.element("aA").word == ""
    vertices = {TREE.apply(e.isometry, o) for e in FREE.ball(3)}
    assert vertices == {TreePoint(e.word) for e in FREE.ball(3)}


def test_domain_cover():
    tree_pts = [TreePoint(e.word) for e in FREE.ball(3)] + [TreePoint("ab", "a", F(1, 3)), TreePoint("B", "B", F(1, 2))]
    assert uncovered_points(FREE, tree_pts, 4) == 0
    rng = np.random.default_rng(0)
    disk_pts = [S.random_point(DISK, rng, 1.5) for _ in range(500)]
    assert uncovered_points(OCT, disk_pts, 4) == 0
    far = [S.random_point(DISK, rng, 5) for _ in range(200)]
    assert uncovered_points(OCT, far, 4) == 0


def test_octagon_reduction():
    rng = np.random.default_rng(1)
    for _ in range(200):
        x = S.random_point(DISK, rng, 8)
        word, z = OCT.domain.reduce(x, 20)
        assert OCT.domain.contains(z)
        assert DISK.distance(DISK.apply(OCT.element(word), z), x) < 1e-8


def test_limit_set_examples():
    rows = limit_set_sample(FREE, ProductPoint(o, TreePoint("a")), power_stream("a", 12))
    assert all(r.c == -1 for r in rows)
    assert rows[-1].estimate_x == TreePoint("a" * 12)
    assert rows[-1].gap == F(1, 2**12)
    rows = limit_set_sample(OCT, ProductPoint(DISK.origin, DISK.origin), S.random_word_stream(np.random.default_rng(2), 20, OCT.letters))
    assert all(r.c == 0 for r in rows)


@given(seeds)
def test_limit_set_merge_disk(seed):
    rng = np.random.default_rng(seed)
    seed_pt = S.random_product_point(DISK, rng, 1)
    rows = limit_set_sample(OCT, seed_pt, S.random_word_stream(rng, 20, OCT.letters))
    assert rows[-1].gap <= 1e-4
    assert all(r.within_bound for r in rows)


@given(seeds)
def test_limit_set_merge_tree(seed):
    rng = np.random.default_rng(seed)
    seed_pt = S.random_product_point(TREE, rng, 1)
    last = limit_set_sample(FREE, seed_pt, S.random_word_stream(rng, 20, FREE.letters))[-1]
    # heads agree to depth >= 10
    assert last.estimate_x.letters[:10] == last.estimate_y.letters[:10]


@pytest.mark.parametrize("group", [OCT, FREE], ids=["disk", "tree"])
@pytest.mark.parametrize("c", [-2, -1, 0, 1, 2])
def test_target_realization(group, c):
    for word in ("a", "ab", "bAd" if group is OCT else "bAB"):
        cc = c if group is FREE else float(c)
        seed = target_seed(group, word, cc)
        row = limit_set_sample(group, seed, power_stream(word, 1, 10))[0]
        assert abs(row.c - c) <= (0 if group is FREE else 1e-4)
        target = target_limit(group, word, c)
        if group is OCT:
            assert DISK.visual_distance(row.estimate_x, target.xi) < 1e-4


@given(seeds, st.sampled_from(["disk", "tree"]))
def test_equivariance_and_omega(seed, which):
    rng = np.random.default_rng(seed)
    group = OCT if which == "disk" else FREE
    model = group.model
    gamma = group.element(S.random_word(rng, int(rng.integers(0, 4)), letters=group.letters))
    g = S.random_geodesic(model, rng)
    lhs = f(apply_to_geodesic(gamma, g))
    rhs = boundary_image(model, gamma, f(g))
    assert model.ideal_equal(lhs.xi, rhs.xi) and model.ideal_equal(lhs.xi_prime, rhs.xi_prime)
    assert abs(lhs.c - rhs.c) <= (0 if model is TREE else 1e-7)
    b = act_on_boundary(gamma, f(g))
    assert b.xi == lhs.xi and b.xi_prime == lhs.xi_prime


def test_act_on_boundary_examples():
    b = Regular(TreeIdealPoint("", "b"), TreeIdealPoint("", "B"), 0)
    assert act_on_boundary(TreeIsometry(""), b) == b
    assert act_on_boundary(TreeIsometry("a"), b) == Regular(TreeIdealPoint("a", "b"), TreeIdealPoint("a", "B"), 0)
    with pytest.raises(UnsupportedRegionError):
        act_on_boundary(TreeIsometry("a"), Singular(1, TreeIdealPoint("", "a")))
    with pytest.raises(UnsupportedRegionError):
        act_on_boundary(TreeIsometry("a"), Regular(TreeIdealPoint("", "a"), TreeIdealPoint("", "a"), 1))


def test_proper_discontinuity_tree():
    point = CompactRegion(ProductPoint(o, o), 0)
    assert proper_discontinuity_report(FREE, point, 6).survivors == ("",)
    unit = CompactRegion(ProductPoint(o, o), 1)
    report = proper_discontinuity_report(FREE, unit, 6)
    assert report.stable
    assert set(report.survivors) == {e.word for e in FREE.ball(2)}
    assert report.survivors == brute_force_ball_survivors(FREE, 6, 1)


def test_proper_discontinuity_with_ideal_points():
    g = ParamGeodesic.from_endpoints(TreeIdealPoint("", "a"), TreeIdealPoint("", "A"))
    region = CompactRegion(ProductPoint(o, o), 1, (g,))
    report = proper_discontinuity_report(FREE, region, 6)
    assert report.stable and len(report.survivors) == len(FREE.ball(2))
    region = CompactRegion(ProductPoint(o, o), 1, (ParamGeodesic.from_endpoints(TreeIdealPoint("", "a"), TreeIdealPoint("", "A"), 4),))
    report = proper_discontinuity_report(FREE, region, 6)
    assert report.stable and "aaaa" in report.survivors


def test_proper_discontinuity_disk():
    region = CompactRegion(ProductPoint(DISK.origin, DISK.origin), 2.0)
    report = proper_discontinuity_report(OCT, region, 6)
    assert report.stable
    assert len(report.survivors) == len(brute_force_ball_survivors(OCT, 6, 2.0, 10.0))
    assert set(report.survivors) >= {"", "a", "A", "b", "B", "c", "C", "d", "D"}


def test_cocompactness():
    rng = np.random.default_rng(4)
    for group in (OCT, FREE):
        model = group.model
        samples = [S.random_product_point(model, rng, 6) for _ in range(100)]
        samples += [S.random_geodesic(model, rng, 4) for _ in range(100)]
        assert cocompactness_check(group, samples, 8).failures == 0
        inside = [ProductPoint(model.origin, model.origin)]
        assert cocompactness_check(group, inside, 0).failures == 0
        far = [S.random_product_point(model, rng, 6) for _ in range(50)]
        res = cocompactness_check(group, far, 0)
        assert res.failures == sum(1 for p in far if not group.domain.contains(model.midpoint(p.x, p.y)))
