"""Cocompact groups acting on the two models, and the diagonal action on X x X.

Two groups are bundled:

* ``octagon-genus2``: the genus-2 surface group generated by the hyperbolic
  translations pairing opposite sides of the regular octagon with interior
  angles pi/4, with relator ``aBcDAbCd``;
* ``free-rank2``: F2 acting on its own Cayley tree by left multiplication.

Group elements are words over the generator letters (capitals are
inverses); ``GroupPresentation.element`` turns a word into an isometry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Sequence

from . import disk as _disk
from .disk import DISK, DiskPoint
from .geodesics import (
    ParamGeodesic,
    apply_to_geodesic,
    f,
    f_inverse_point,
    rho_tilde,
)
from .product import ProductPoint, Regular, d_max, in_omega, power
from .space import model_of
from .tree import TREE, TreeIsometry, TreePoint, reduce_word


class UnsupportedRegionError(ValueError):
    """The boundary action is only implemented on the ideal domain."""


def _inverse_letter(c: str) -> str:
    return c.swapcase()


# -- fundamental domains -----------------------------------------------------

# interior angle pi/4, eight sides: cosh(inradius) = cot(pi/8)
OCTAGON_INRADIUS = math.acosh(1.0 + math.sqrt(2.0))
OCTAGON_CIRCUMRADIUS = math.acosh(3.0 + 2.0 * math.sqrt(2.0))
OCTAGON_RELATOR = "aBcDAbCd"


@dataclass(frozen=True)
class OctagonDomain:
    """Regular octagon centered at 0, the Dirichlet domain of the octagon group."""

    side_pairings: tuple  # (letter, isometry) for the eight sides, by direction k pi/4
    inradius: float = OCTAGON_INRADIUS
    circumradius: float = OCTAGON_CIRCUMRADIUS
    tol: float = 1e-9

    def contains(self, x: DiskPoint) -> bool:
        d0 = DISK.distance(x, DISK.origin)
        if d0 <= self.inradius:
            return True
        return all(d0 <= DISK.distance(x, DISK.apply(g, DISK.origin)) + self.tol for _, g in self.side_pairings)

    def reduce(self, x: DiskPoint, max_steps: int) -> tuple[str, DiskPoint] | None:
        """Word w with w^-1 x in the octagon, by greedy Dirichlet descent.

        Returns None when more than ``max_steps`` letters would be needed.
        """
        word = ""
        z = x
        for _ in range(max_steps + 1):
            d0 = DISK.distance(z, DISK.origin)
            best = None
            for letter, g in self.side_pairings:
                d = DISK.distance(z, DISK.apply(g, DISK.origin))
                if d < d0 - 1e-12 and (best is None or d < best[0]):
                    best = (d, letter, g)
            if best is None:
                return word, z
            if len(word) == max_steps:
                return None
            _, letter, g = best
            z = DISK.apply(DISK.inverse(g), z)
            word += letter
        return None


@dataclass(frozen=True)
class StarDomain:
    """Closed half-edge star around the identity vertex of the tree."""

    radius: Fraction = Fraction(1, 2)
    circumradius: Fraction = Fraction(1, 2)

    def contains(self, x: TreePoint) -> bool:
        return x.depth <= self.radius

    def reduce(self, x: TreePoint, max_steps: int) -> tuple[str, TreePoint] | None:
        v = x.word if x.offset <= self.radius else x.word + x.direction
        if len(v) > max_steps:
            return None
        return v, TREE.apply(TreeIsometry(_inverse_word(v)), x)


def _inverse_word(w: str) -> str:
    return w[::-1].swapcase()


# -- presentations -----------------------------------------------------------


@dataclass(frozen=True)
class Element:
    word: str
    isometry: Any


@dataclass(frozen=True)
class GroupPresentation:
    name: str
    model: Any
    generators: dict  # letter -> isometry, inverses included
    relators: tuple
    domain: Any
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def letters(self) -> str:
        return "".join(self.generators)

    def element(self, word: str):
        model = self.model
        if model is TREE:
            return TreeIsometry(reduce_word(word))
        g = model.identity()
        for c in word:
            try:
                g = model.compose(g, self.generators[c])
            except KeyError:
                raise ValueError(f"unknown generator letter {c!r} for {self.name}") from None
        return g

    def displacement(self, g):
        return self.model.orbit_distance(g, self.model.origin)

    def relator_defects(self) -> list[float]:
        """Distance of each relator from the identity (projectively for the disk)."""
        out = []
        for r in self.relators:
            g = self.element(r)
            if self.model is TREE:
                out.append(0 if g.word == "" else len(g.word))
            else:
                m = g.matrix
                out.append(float(min(abs(m - _eye()).max(), abs(m + _eye()).max())))
        return out

    def ball(self, radius: int, max_displacement=None) -> list[Element]:
        """Elements of word length <= radius, deduplicated, in BFS order.

        With ``max_displacement`` the search never leaves the set of elements
        moving o by at most that much; callers use it to keep disk searches
        small when only nearby elements matter.
        """
        key = ("ball", radius, max_displacement)
        if key in self._cache:
            return self._cache[key]
        model = self.model
        ident = model.identity()
        out = [Element("", ident)]
        seen = {self._key(ident)}
        frontier = out[:]
        for _ in range(radius):
            nxt = []
            for el in frontier:
                for c, gen in self.generators.items():
                    if el.word and el.word[-1] == _inverse_letter(c):
                        continue
                    g = model.compose(el.isometry, gen)
                    k = self._key(g)
                    if k in seen:
                        continue
                    if max_displacement is not None and self.displacement(g) > max_displacement:
                        continue
                    seen.add(k)
                    e = Element(el.word + c, g)
                    out.append(e)
                    nxt.append(e)
            frontier = nxt
        self._cache[key] = out
        return out

    def _key(self, g):
        return g.word if self.model is TREE else g.key()


def _eye():
    import numpy as np

    return np.eye(2)


def octagon_group() -> GroupPresentation:
    """Genus-2 surface group pairing opposite sides of the regular pi/4 octagon."""
    gens = {}
    for k, c in enumerate("abcd"):
        g = _disk.translation(2.0 * OCTAGON_INRADIUS, k * math.pi / 4.0)
        gens[c] = g
    for c in "abcd":
        gens[c.upper()] = DISK.inverse(gens[c])
    sides = tuple((c, gens[c]) for c in "abcdABCD")
    group = GroupPresentation("octagon-genus2", DISK, gens, (OCTAGON_RELATOR,), OctagonDomain(sides))
    defect = group.relator_defects()[0]
    if defect > 1e-9:
        raise ArithmeticError(f"octagon relator defect {defect:g} exceeds 1e-9")
    return group


def free_group_action() -> GroupPresentation:
    gens = {c: TreeIsometry(c) for c in "abAB"}
    return GroupPresentation("free-rank2", TREE, gens, (), StarDomain())


GROUPS = {"octagon-genus2": octagon_group, "free-rank2": free_group_action}
DEFAULT_GROUP = {"disk": "octagon-genus2", "tree": "free-rank2"}


def get_group(name: str) -> GroupPresentation:
    try:
        return GROUPS[name]()
    except KeyError:
        raise ValueError(f"unknown group {name!r}; expected one of {sorted(GROUPS)}") from None


# -- diagonal action ---------------------------------------------------------


def act(gamma, obj):
    """Diagonal action on product points, geodesics and points of the ideal domain."""
    if isinstance(obj, ProductPoint):
        model = obj.model
        return ProductPoint(model.apply(gamma, obj.x), model.apply(gamma, obj.y))
    if isinstance(obj, ParamGeodesic):
        return apply_to_geodesic(gamma, obj)
    if isinstance(obj, Regular):
        return act_on_boundary(gamma, obj)
    return gamma.model.apply(gamma, obj)


def act_on_boundary(gamma, b) -> Regular:
    """gamma . b for b in the ideal domain, computed by pushing the geodesic f^-1(b)."""
    if not in_omega(b):
        raise UnsupportedRegionError("the boundary action is implemented on the ideal domain only")
    return f(apply_to_geodesic(gamma, f_inverse_point(b)))


# -- limit set ---------------------------------------------------------------


@dataclass(frozen=True)
class LimitSample:
    index: int
    word: str
    estimate_x: Any
    estimate_y: Any
    gap: Any  # visual distance between the two estimates
    c: Any  # d(gamma x, o) - d(gamma y, o)
    within_bound: bool  # |c| <= d(x, y)


def limit_set_sample(group: GroupPresentation, seed: ProductPoint, words: Iterable[str]) -> list[LimitSample]:
    """Empirical boundary coordinates of (gamma_n x, gamma_n y) along a word stream.

    On the disk the estimates are the radial directions of the orbit points,
    computed without forming the (possibly unrepresentable) points; in the
    tree they are the orbit points themselves, whose visual gap is
    2^-(floor of their Gromov product at o).
    """
    model = model_of(seed)
    bound = model.distance(seed.x, seed.y)
    out = []
    for i, word in enumerate(words, start=1):
        g = group.element(word)
        c = model.orbit_distance(g, seed.x) - model.orbit_distance(g, seed.y)
        if model is TREE:
            ex, ey = model.apply(g, seed.x), model.apply(g, seed.y)
            gp = (ex.depth + ey.depth - model.distance(ex, ey)) / 2
            gap = Fraction(1, 2 ** math.floor(gp))
        else:
            ex, ey = model.orbit_direction(g, seed.x), model.orbit_direction(g, seed.y)
            gap = model.visual_distance(ex, ey)
        out.append(LimitSample(i, word, ex, ey, gap, c, abs(c) <= bound + model.tol))
    return out


def power_stream(word: str, count: int, start: int = 1) -> list[str]:
    return [word * n for n in range(start, start + count)]


def target_seed(group: GroupPresentation, word: str, c, depth=1) -> ProductPoint:
    """Seed whose orbit under powers of ``word`` converges to (xi, xi, c).

    xi is the attracting end of the axis of ``word``; the seed sits on the
    ray from o to the repelling end eta, with b_eta(x) - b_eta(y) = c.
    """
    model = group.model
    _, eta = model.fixed_points(group.element(word))
    r = model.ray(model.origin, eta)
    t = max(depth, depth - c)
    return ProductPoint(r(t), r(t + c))


def target_limit(group: GroupPresentation, word: str, c) -> Regular:
    xi, _ = group.model.fixed_points(group.element(word))
    return Regular(xi, xi, c)


# -- proper discontinuity and cocompactness ----------------------------------


@dataclass(frozen=True)
class CompactRegion:
    """A closed d_max-ball around ``center`` plus finitely many points of the ideal domain."""

    center: ProductPoint
    radius: Any
    omega_points: tuple = ()

    def projection(self):
        """(center point, radius, finite extras) describing a set containing rho~(K)."""
        model = self.center.model
        c = rho_tilde(self.center).x
        extras = tuple(rho_tilde(g).x for g in self.omega_points)
        return model, c, self.radius, extras


@dataclass(frozen=True)
class DiscontinuityReport:
    radius: int
    survivors: tuple  # words of group elements gamma with rho~(K) meeting gamma rho~(K)
    next_survivors: tuple  # same at radius + 2
    searched: int

    @property
    def stable(self) -> bool:
        return self.survivors == self.next_survivors


def _projection_meets(group, region: CompactRegion, g) -> bool:
    model, c, r, extras = region.projection()
    d = model.distance
    tol = model.tol
    gc = model.apply(g, c)
    if d(c, gc) <= 2 * r + tol:
        return True
    gextras = [model.apply(g, e) for e in extras]
    for e, ge in zip(extras, gextras):
        if d(ge, c) <= r + tol or d(e, gc) <= r + tol:
            return True
    return any(d(ge, e) <= tol for ge in gextras for e in extras)


def _survivors(group, region, radius, prune) -> tuple[tuple, int]:
    elements = group.ball(radius, max_displacement=prune)
    words = tuple(sorted((e.word for e in elements if _projection_meets(group, region, e.isometry)), key=lambda w: (len(w), w)))
    return words, len(elements)


def _prune_radius(group, region: CompactRegion):
    model, c, r, extras = region.projection()
    o = model.origin
    reach = max([model.distance(o, c) + r] + [model.distance(o, e) for e in extras])
    # any survivor moves o by at most 2 reach; the Dirichlet tiles met by
    # a geodesic from o to gamma o are found by a search that stays within
    # two circumradii of it
    return 2 * reach + 2 * group.domain.circumradius


def proper_discontinuity_report(group: GroupPresentation, region: CompactRegion, radius: int) -> DiscontinuityReport:
    """Elements gamma of the radius-ball with rho~(K) meeting gamma rho~(K), and the same at radius + 2."""
    prune = _prune_radius(group, region)
    first, searched = _survivors(group, region, radius, prune)
    second, _ = _survivors(group, region, radius + 2, prune)
    return DiscontinuityReport(radius, first, second, searched)


def brute_force_ball_survivors(group: GroupPresentation, radius: int, window_radius, max_displacement=None) -> tuple:
    """Elements with d_max(gamma O, O) <= 2 r, by direct distance computation."""
    model = group.model
    o = model.origin
    base = ProductPoint(o, o)
    words = []
    for e in group.ball(radius, max_displacement):
        if d_max(act(e.isometry, base), base) <= 2 * window_radius + model.tol:
            words.append(e.word)
    return tuple(sorted(words, key=lambda w: (len(w), w)))


@dataclass(frozen=True)
class CocompactnessResult:
    samples: int
    failures: int
    max_word_length: int


def cocompactness_check(group: GroupPresentation, samples: Sequence, max_radius: int) -> CocompactnessResult:
    """Count samples p for which no gamma of word length <= max_radius puts rho~(gamma p) in K."""
    model = group.model
    failures = 0
    longest = 0
    for p in samples:
        m = rho_tilde(p).x
        found = group.domain.reduce(m, max_radius)
        if found is None:
            failures += 1
            continue
        word, _ = found
        gamma = model.inverse(group.element(word))
        if not group.domain.contains(rho_tilde(act(gamma, p)).x):
            failures += 1
            continue
        longest = max(longest, len(word))
    return CocompactnessResult(len(samples), failures, longest)


def uncovered_points(group: GroupPresentation, points: Sequence, radius: int) -> int:
    """Points x with no gamma in the radius-ball such that gamma^-1 x lies in the domain."""
    model = group.model
    inverses = [model.inverse(e.isometry) for e in group.ball(radius)]
    return sum(1 for x in points if not any(group.domain.contains(model.apply(g, x)) for g in inverses))


def orbit_power(group: GroupPresentation, word: str, n: int):
    return power(group.model, group.element(word), n)
