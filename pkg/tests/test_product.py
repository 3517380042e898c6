import math
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from horomax import sampling as S
from horomax.disk import DISK, DiskIdealPoint, DiskPoint
from horomax.geodesics import ParamGeodesic
from horomax.product import (
    BoundedFirst,
    Case,
    GeodesicPair,
    NotDivergentError,
    OrbitSeq,
    ProductPoint,
    RayPair,
    Regular,
    Singular,
    WrongVariantError,
    boundary_from_json,
    boundary_to_json,
    classify,
    d_max,
    empirical_limit_check,
    horofunction_eval,
    in_omega,
    phi_reg,
    phi_reg_inverse,
    phi_sing,
    phi_sing_inverse,
    renormalize,
)
from horomax.tree import TREE, TreeIdealPoint, TreeIsometry, TreePoint

o = TREE.origin
a_inf, A_inf, b_inf, B_inf = (TreeIdealPoint("", c) for c in "aAbB")


def test_d_max_examples():
    assert d_max(ProductPoint(o, o), ProductPoint(TreePoint("aa"), TreePoint("b"))) == 2
    p = ProductPoint(DiskPoint(0.5), DiskPoint(-0.5))
    assert d_max(ProductPoint(DISK.origin, DISK.origin), p) == pytest.approx(math.log(3))
    assert d_max(p, p) == 0


def test_horofunction_eval_examples():
    b = Regular(a_inf, b_inf, 0)
    assert horofunction_eval(b, ProductPoint(TreePoint("a"), TreePoint("b"))) == -1
    assert horofunction_eval(b, ProductPoint(o, o)) == 0
    assert horofunction_eval(Singular(2, b_inf), ProductPoint(TreePoint("a"), TreePoint("bb"))) == -2


def test_regular_representative_convention():
    # c is the limit of d(x_n, o) - d(y_n, o); the class is max{b_xi, b_xi' - c}
    seq = RayPair(TREE.ray(TreePoint("aa"), a_inf), 1, TREE.ray(o, b_inf), 1)
    b = classify(seq).limit
    assert b.c == 2
    z = ProductPoint(TreePoint("B"), TreePoint("b"))
    assert horofunction_eval(b, z) == max(1, -1 - 2)
    z = ProductPoint(TreePoint("a"), TreePoint("B"))
    assert horofunction_eval(b, z) == max(-1, 1 - 2)
    assert empirical_limit_check(seq, b, [z], 30) == 0


def test_disk_regular_example_normalized_at_origin():
    # normalized so that the value at O vanishes
    b = Regular(DiskIdealPoint(0), DiskIdealPoint(math.pi), 1.0)
    assert horofunction_eval(b, ProductPoint(DISK.origin, DISK.origin)) == 0


def test_phi_maps():
    s = Singular(1, a_inf)
    assert phi_sing(s) == (1, a_inf) and phi_sing_inverse(1, a_inf) == s
    r = Regular(a_inf, b_inf, F(3, 2))
    assert phi_reg(r) == (a_inf, b_inf, F(3, 2)) and phi_reg_inverse(*phi_reg(r)) == r
    with pytest.raises(WrongVariantError):
        phi_reg(s)
    with pytest.raises(WrongVariantError):
        phi_sing(r)


@given(st.integers(0, 2**32 - 1), st.booleans(), st.sampled_from([DISK, TREE]))
def test_boundary_json_roundtrip(seed, regular, model):
    b = S.random_boundary(model, np.random.default_rng(seed), regular)
    assert boundary_from_json(boundary_to_json(b), model) == b


def test_in_omega():
    assert not in_omega(Singular(1, a_inf))
    assert not in_omega(Regular(a_inf, a_inf, 2))
    assert in_omega(Regular(a_inf, b_inf, F(3, 2)))


def test_renormalize_examples():
    assert renormalize(a_inf, o, b_inf, o) == Regular(a_inf, b_inf, 0)
    b = renormalize(a_inf, TreePoint("a"), b_inf, o)
    grid = [ProductPoint(TREE.ray(o, xi)(t), TREE.ray(o, eta)(s)) for xi in (a_inf, A_inf, b_inf) for eta in (b_inf, B_inf) for t in (0, 1, 2) for s in (0, 1, 2)]
    diffs = {horofunction_eval(b, z) - max(TREE.busemann(TreePoint("a"), a_inf, z.x), TREE.busemann(o, b_inf, z.y)) for z in grid}
    assert len(diffs) == 1
    # moving both normalizers one unit towards their ends keeps the class
    assert renormalize(a_inf, TreePoint("aa"), b_inf, TreePoint("b")) == b


@given(st.integers(0, 2**32 - 1))
def test_renormalize_agrees_up_to_constant_on_disk(seed):
    rng = np.random.default_rng(seed)
    xi, eta = S.random_ideal(DISK, rng), S.random_ideal(DISK, rng)
    p, q = S.random_point(DISK, rng), S.random_point(DISK, rng)
    b = renormalize(xi, p, eta, q)
    grid = S.grid(DISK, rng, 12, 2)
    diffs = [horofunction_eval(b, z) - max(DISK.busemann(p, xi, z.x), DISK.busemann(q, eta, z.y)) for z in grid]
    assert max(diffs) - min(diffs) < 1e-9


def test_classify_examples():
    ray_b = TREE.ray(o, b_inf)
    v = classify(BoundedFirst((o,), ray_b))
    assert v.case is Case.I and v.limit == Singular(2, b_inf)
    g = ParamGeodesic.from_endpoints(a_inf, A_inf)
    v = classify(GeodesicPair(g))
    assert v.case is Case.II and v.limit == Regular(a_inf, A_inf, 0)
    r0 = DISK.ray(DISK.origin, DiskIdealPoint(0))
    r1 = DISK.ray(DISK.origin, DiskIdealPoint(1))
    v = classify(RayPair(r0, 2, r1, 1))
    assert v.case is Case.III and not v.permuted and v.limit.factor == 1
    v = classify(RayPair(r0, 1, r1, 2))
    assert v.case is Case.III and v.permuted and v.limit == Singular(2, DiskIdealPoint(1))
    v = classify(RayPair(r0, 1, r1, 0))
    assert v.case is Case.I and v.permuted
    with pytest.raises(NotDivergentError):
        classify(RayPair(r0, 0, r1, 0))
    with pytest.raises(NotDivergentError):
        classify(OrbitSeq(TreeIsometry(""), ProductPoint(o, o)))


def test_orbit_classification_tree():
    v = classify(OrbitSeq(TreeIsometry("a"), ProductPoint(o, TreePoint("a"))))
    assert v.case is Case.II and v.limit == Regular(a_inf, a_inf, -1)


def test_empirical_check_examples():
    g = ParamGeodesic.from_endpoints(a_inf, A_inf)
    grid = [ProductPoint(x, y) for x in _tree_ball(3) for y in (o, TreePoint("b"), TreePoint("aB"))]
    assert empirical_limit_check(GeodesicPair(g), classify(GeodesicPair(g)).limit, grid, 10) == 0
    dg = ParamGeodesic.from_endpoints(DiskIdealPoint(0), DiskIdealPoint(math.pi))
    dgrid = S.grid(DISK, np.random.default_rng(0))
    seq = GeodesicPair(dg)
    b = classify(seq).limit
    assert empirical_limit_check(seq, b, dgrid, 20) <= 1e-6
    wrong = Regular(DiskIdealPoint(0.5), DiskIdealPoint(math.pi), 0.0)
    errs = [empirical_limit_check(seq, wrong, dgrid, n) for n in (10, 15, 20)]
    assert min(errs) > 1e-2


def _tree_ball(r):
    out = [o]
    frontier = [""]
    for _ in range(r):
        frontier = [w + c for w in frontier for c in "aAbB" if not w or c != w[-1].swapcase()]
        out += [TreePoint(w) for w in frontier]
    return out


@given(st.integers(0, 2**32 - 1), st.sampled_from(["I", "II", "III"]))
def test_classification_soundness_tree(seed, case):
    rng = np.random.default_rng(seed)
    seq = S.sequence_for_case(TREE, rng, case)
    v = classify(seq)
    assert v.case.value == case
    assert empirical_limit_check(seq, v.limit, S.grid(TREE, rng), 25) == 0


@given(st.integers(0, 2**32 - 1), st.sampled_from(["I", "II", "III"]))
def test_classification_soundness_disk(seed, case):
    rng = np.random.default_rng(seed)
    seq = S.sequence_for_case(DISK, rng, case)
    v = classify(seq)
    grid = S.grid(DISK, rng)
    assert empirical_limit_check(seq, v.limit, grid, 25) <= 1e-5
    assert empirical_limit_check(seq, S.wrong_target(DISK, v.limit, rng), grid, 25) > 1e-2


@given(st.integers(0, 2**32 - 1), st.sampled_from([DISK, TREE]))
def test_orbit_triangle_bound(seed, model):
    rng = np.random.default_rng(seed)
    x, y = S.random_point(model, rng), S.random_point(model, rng)
    g = S.random_isometry(model, rng, 6)
    gap = abs(model.orbit_distance(g, x) - model.orbit_distance(g, y))
    assert gap <= model.distance(x, y) + 1e-9
