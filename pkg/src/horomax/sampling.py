"""Random test inputs for both models, driven by a numpy Generator.

Disk samples stay within a fixed hyperbolic radius of 0 so that sequences
run out to index 25 without reaching the representable edge of the disk.
Tree samples use small denominators so exact arithmetic stays cheap.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from . import disk as _disk
from .disk import DISK, DiskIdealPoint
from .geodesics import ParamGeodesic
from .product import BoundedFirst, GeodesicPair, OrbitSeq, ProductPoint, RayPair, Regular, Singular
from .tree import LETTERS, TREE, InvalidAddressError, TreeIdealPoint, TreeIsometry, TreePoint, inverse_letter

DENOMINATORS = (1, 2, 3, 4, 6, 8)


def _fraction(rng: np.random.Generator, low, high) -> Fraction:
    den = int(rng.choice(DENOMINATORS))
    lo, hi = math.ceil(low * den), math.floor(high * den)
    return Fraction(int(rng.integers(lo, hi + 1)), den)


def real(model, rng: np.random.Generator, low, high):
    if model is TREE:
        return _fraction(rng, low, high)
    return float(rng.uniform(low, high))


def random_word(rng: np.random.Generator, length: int, after: str = "", letters: str = LETTERS) -> str:
    """Reduced word of the given length that may follow ``after``."""
    out = ""
    prev = after[-1:] if after else ""
    for _ in range(length):
        choices = [c for c in letters if not prev or c != inverse_letter(prev)]
        c = choices[int(rng.integers(len(choices)))]
        out += c
        prev = c
    return out


def random_point(model, rng: np.random.Generator, radius=2):
    """Point at distance at most ``radius`` from o."""
    if model is TREE:
        depth = _fraction(rng, 0, radius)
        n = math.floor(depth)
        if depth == n:
            return TreePoint(random_word(rng, n))
        return _tree_point(rng, n, depth - n)
    r = float(rng.uniform(0.0, radius))
    angle = float(rng.uniform(0.0, 2.0 * math.pi))
    return DISK.apply(_disk.rotation(angle), _disk._diameter_point(r))


def _tree_point(rng, n: int, offset: Fraction) -> TreePoint:
    word = random_word(rng, n + 1)
    return TreePoint(word[:n], word[n], offset)


def random_ideal(model, rng: np.random.Generator, max_head: int = 3, max_cycle: int = 3):
    if model is DISK:
        return DiskIdealPoint(float(rng.uniform(0.0, 2.0 * math.pi)))
    while True:
        head = random_word(rng, int(rng.integers(0, max_head + 1)))
        cycle = random_word(rng, int(rng.integers(1, max_cycle + 1)), head)
        try:
            return TreeIdealPoint(head, cycle)
        except InvalidAddressError:
            continue


def distinct_ideal(model, rng: np.random.Generator, other, **kw):
    while True:
        xi = random_ideal(model, rng, **kw)
        if not model.ideal_equal(xi, other) and (model is TREE or model.visual_distance(xi, other) > 1e-3):
            return xi


def random_geodesic(model, rng: np.random.Generator, max_offset=2) -> ParamGeodesic:
    xi = random_ideal(model, rng)
    eta = distinct_ideal(model, rng, xi)
    return ParamGeodesic.from_endpoints(xi, eta, real(model, rng, -max_offset, max_offset))


def near_geodesic(model, rng: np.random.Generator, max_offset=1) -> ParamGeodesic:
    """Random geodesic passing within about one unit of o (disk) or through a vertex near o (tree)."""
    if model is TREE:
        return random_geodesic(model, rng, max_offset)
    xi = random_ideal(model, rng)
    # endpoints at least a quarter turn apart keep the line within ~1 of 0
    eta = DiskIdealPoint(xi.theta + float(rng.uniform(0.5 * math.pi, 1.5 * math.pi)))
    return ParamGeodesic.from_endpoints(xi, eta, real(model, rng, -max_offset, max_offset))


def random_isometry(model, rng: np.random.Generator, size=3):
    if model is TREE:
        return TreeIsometry(random_word(rng, int(rng.integers(0, size + 1))))
    t = _disk.translation(float(rng.uniform(0.0, size)), float(rng.uniform(0.0, 2.0 * math.pi)))
    return DISK.compose(t, _disk.rotation(float(rng.uniform(0.0, 2.0 * math.pi))))


def random_hyperbolic(model, rng: np.random.Generator, length=(0.8, 1.0)):
    """Hyperbolic isometry with a short translation length and an axis near o."""
    if model is TREE:
        while True:
            g = TreeIsometry(random_word(rng, int(rng.integers(1, 4))))
            if g.word:
                return g
    core = _disk.translation(float(rng.uniform(*length)), float(rng.uniform(0.0, 2.0 * math.pi)))
    m = _disk.translation(float(rng.uniform(0.0, 0.5)), float(rng.uniform(0.0, 2.0 * math.pi)))
    return DISK.compose(DISK.compose(m, core), DISK.inverse(m))


def random_product_point(model, rng: np.random.Generator, radius=2) -> ProductPoint:
    return ProductPoint(random_point(model, rng, radius), random_point(model, rng, radius))


def grid(model, rng: np.random.Generator, count: int = 20, radius=1) -> list[ProductPoint]:
    """Points of the closed d_max-ball of the given radius about O.

    O and the four diagonal points at distance ``radius`` along the
    coordinate directions come first; the rest are random.
    """
    o = model.origin
    pts = [ProductPoint(o, o)]
    for k in range(4):
        if model is TREE:
            x = TREE.ray(o, TreeIdealPoint("", LETTERS[k]))(radius)
        else:
            x = DISK.ray(o, DiskIdealPoint(k * math.pi / 2))(radius)
        pts.append(ProductPoint(x, x))
    pts += [random_product_point(model, rng, radius) for _ in range(count - len(pts))]
    return pts


def random_boundary(model, rng: np.random.Generator, regular: bool = True):
    if not regular:
        return Singular(int(rng.integers(1, 3)), random_ideal(model, rng))
    return Regular(random_ideal(model, rng), random_ideal(model, rng), real(model, rng, -3, 3))


# -- structured sequences ----------------------------------------------------


def _ray(model, rng, radius=0.5):
    return model.ray(random_point(model, rng, radius), random_ideal(model, rng))


def sequence_for_case(model, rng: np.random.Generator, case: str):
    """A random structured sequence of the requested case ("I", "II" or "III")."""
    if case == "I":
        kind = int(rng.integers(3))
        if kind == 0:
            anchor = tuple(random_point(model, rng, 1) for _ in range(int(rng.integers(1, 4))))
            return BoundedFirst(anchor, _ray(model, rng))
        r1, r2 = _ray(model, rng), _ray(model, rng)
        return RayPair(r1, 0, r2, 1) if kind == 1 else RayPair(r1, 1, r2, 0)
    if case == "III":
        r1, r2 = _ray(model, rng), _ray(model, rng)
        slow = Fraction(1, 2) if model is TREE else 0.5
        return RayPair(r1, 1, r2, slow) if rng.integers(2) else RayPair(r1, slow, r2, 1)
    if case == "II":
        kind = int(rng.integers(3))
        if kind == 0:
            return RayPair(_ray(model, rng), 1, _ray(model, rng), 1)
        if kind == 1:
            return GeodesicPair(near_geodesic(model, rng))
        seed = random_product_point(model, rng, 1)
        return OrbitSeq(random_hyperbolic(model, rng), seed)
    raise ValueError(f"unknown case {case!r}")


def wrong_target(model, b, rng: np.random.Generator):
    """A boundary point whose horofunction differs from b's on the unit d_max-ball."""
    if isinstance(b, Singular):
        return Singular(b.factor, _far_ideal(model, b.xi))
    return Regular(_far_ideal(model, b.xi), _far_ideal(model, b.xi_prime), b.c)


def _far_ideal(model, xi):
    if model is DISK:
        return DiskIdealPoint(xi.theta + math.pi)
    first = xi.prefix(1)
    return TreeIdealPoint("", inverse_letter(first))


def random_word_stream(rng: np.random.Generator, length: int, letters: str) -> list[str]:
    """Prefixes of one random reduced word."""
    w = random_word(rng, length, letters=letters)
    return [w[:n] for n in range(1, length + 1)]
