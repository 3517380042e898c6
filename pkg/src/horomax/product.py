"""The max-metric product X x X and its horofunction boundary.

Boundary points are stored by coordinates, always normalized at O = (o, o):

* ``Singular(factor, xi)`` is the class of the Busemann function of ``xi``
  read on one factor only;
* ``Regular(xi, xi_prime, c)`` is the class of
  ``max{b_xi(z), b_xi'(z') - c}`` with ``b`` the Busemann functions vanishing
  at o.  ``c`` is the limit of ``d(x_n, o) - d(y_n, o)`` along any sequence
  converging to the point, which is the coordinate used by the geodesic
  correspondence and the limit-set computations.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any, Sequence

from .encoding import decode_ideal, decode_real, encode_ideal, encode_real
from .space import RayHandle, model_of


class WrongVariantError(TypeError):
    """A singular boundary point was passed where a regular one is needed, or vice versa."""


class NotDivergentError(ValueError):
    """The sequence descriptor does not leave every compact set."""


@dataclass(frozen=True)
class ProductPoint:
    x: Any
    y: Any

    def __post_init__(self):
        model_of(self.x, self.y)

    @property
    def model(self):
        return self.x.model

    def __iter__(self):
        return iter((self.x, self.y))


def base_point(model) -> ProductPoint:
    return ProductPoint(model.origin, model.origin)


def d_max(p: ProductPoint, q: ProductPoint):
    model = model_of(p, q)
    return max(model.distance(p.x, q.x), model.distance(p.y, q.y))


# -- boundary points ---------------------------------------------------------


@dataclass(frozen=True)
class Singular:
    factor: int
    xi: Any

    def __post_init__(self):
        if self.factor not in (1, 2):
            raise ValueError(f"factor must be 1 or 2, got {self.factor}")

    @property
    def model(self):
        return self.xi.model

    kind = "singular"


@dataclass(frozen=True)
class Regular:
    xi: Any
    xi_prime: Any
    c: Any

    def __post_init__(self):
        model_of(self.xi, self.xi_prime)

    @property
    def model(self):
        return self.xi.model

    kind = "regular"


MaxBoundaryPoint = Singular | Regular


def boundary_equal(a, b, tol: float | None = None) -> bool:
    """Coordinate equality (exact in the tree, within ``tol`` on the disk)."""
    if type(a) is not type(b) or a.model is not b.model:
        return False
    model = a.model
    tol = model.tol if tol is None else tol
    if isinstance(a, Singular):
        return a.factor == b.factor and model.ideal_equal(a.xi, b.xi)
    return (
        model.ideal_equal(a.xi, b.xi)
        and model.ideal_equal(a.xi_prime, b.xi_prime)
        and abs(a.c - b.c) <= tol
    )


def horofunction_eval(b, z: ProductPoint):
    """Value at ``z`` of the horofunction of ``b`` that vanishes at O."""
    model = model_of(b, z)
    o = model.origin
    if isinstance(b, Singular):
        coord = z.x if b.factor == 1 else z.y
        return model.busemann(o, b.xi, coord)
    first = model.busemann(o, b.xi, z.x)
    second = model.busemann(o, b.xi_prime, z.y) - b.c
    # the max at O is max(0, -c)
    return max(first, second) - max(0 * b.c, -b.c)


def phi_sing(b):
    if not isinstance(b, Singular):
        raise WrongVariantError("phi_sing needs a singular boundary point")
    return b.factor, b.xi


def phi_sing_inverse(factor: int, xi) -> Singular:
    return Singular(factor, xi)


def phi_reg(b):
    if not isinstance(b, Regular):
        raise WrongVariantError("phi_reg needs a regular boundary point")
    return b.xi, b.xi_prime, b.c


def phi_reg_inverse(xi, xi_prime, c) -> Regular:
    return Regular(xi, xi_prime, c)


def renormalize(xi, p, xi_prime, p_prime) -> Regular:
    """Coordinates of the class of max{b^p_xi(z), b^p'_xi'(z')}."""
    model = model_of(xi, p, xi_prime, p_prime)
    o = model.origin
    c = model.busemann(o, xi_prime, p_prime) - model.busemann(o, xi, p)
    return Regular(xi, xi_prime, c)


def in_omega(b) -> bool:
    return isinstance(b, Regular) and not b.model.ideal_equal(b.xi, b.xi_prime)


# -- structured sequences ----------------------------------------------------


@dataclass(frozen=True)
class RayPair:
    """(ray1(speed1 n), ray2(speed2 n))."""

    ray1: RayHandle
    speed1: Any
    ray2: RayHandle
    speed2: Any

    def at(self, n) -> ProductPoint:
        return ProductPoint(self.ray1(self.speed1 * n), self.ray2(self.speed2 * n))


@dataclass(frozen=True)
class GeodesicPair:
    """(g(n), g(-n)) for a parametrized geodesic g."""

    g: Any

    def at(self, n) -> ProductPoint:
        return ProductPoint(self.g(n), self.g(-n))


@dataclass(frozen=True)
class OrbitSeq:
    """(gamma^n x, gamma^n y) for a fixed isometry gamma and seed (x, y)."""

    generator: Any
    seed: ProductPoint

    def at(self, n) -> ProductPoint:
        model = self.seed.model
        g = power(model, self.generator, n)
        return ProductPoint(model.apply(g, self.seed.x), model.apply(g, self.seed.y))


@dataclass(frozen=True)
class BoundedFirst:
    """First coordinate cycles through a finite anchor set, second runs along a ray."""

    anchor: tuple
    ray2: RayHandle

    def at(self, n) -> ProductPoint:
        return ProductPoint(self.anchor[n % len(self.anchor)], self.ray2(n))


def power(model, g, n: int):
    result = model.identity()
    base = g if n >= 0 else model.inverse(g)
    n = abs(n)
    while n:
        if n & 1:
            result = model.compose(result, base)
        base = model.compose(base, base)
        n >>= 1
    return result


class Case(enum.Enum):
    I = "I"
    II = "II"
    III = "III"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class Classification:
    case: Case
    permuted: bool
    limit: Any = None
    data: dict = field(default_factory=dict)


def classify(seq) -> Classification:
    """Case of the divergent sequence and the boundary point it converges to."""
    if isinstance(seq, GeodesicPair):
        g = seq.g
        model = g.xi_plus.model
        o, g0 = model.origin, g.base_point
        c = model.busemann(o, g.xi_minus, g0) - model.busemann(o, g.xi_plus, g0)
        return Classification(Case.II, False, Regular(g.xi_plus, g.xi_minus, c))

    if isinstance(seq, BoundedFirst):
        if not seq.anchor:
            raise ValueError("anchor set is empty")
        return Classification(Case.I, False, Singular(2, seq.ray2.target))

    if isinstance(seq, RayPair):
        s1, s2 = seq.speed1, seq.speed2
        if s1 < 0 or s2 < 0:
            raise ValueError("ray speeds must be nonnegative")
        if s1 == 0 and s2 == 0:
            raise NotDivergentError("both coordinates are constant")
        r1, r2 = seq.ray1, seq.ray2
        if s1 == 0:
            return Classification(Case.I, False, Singular(2, r2.target))
        if s2 == 0:
            return Classification(Case.I, True, Singular(1, r1.target))
        if s1 > s2:
            return Classification(Case.III, False, Singular(1, r1.target))
        if s1 < s2:
            return Classification(Case.III, True, Singular(2, r2.target))
        model = model_of(r1.origin, r2.origin)
        o = model.origin
        # d(r(t), o) - t -> b^{r(0)}(o) = -b^o(r(0))
        c = model.busemann(o, r2.target, r2.origin) - model.busemann(o, r1.target, r1.origin)
        return Classification(Case.II, False, Regular(r1.target, r2.target, c))

    if isinstance(seq, OrbitSeq):
        model = seq.seed.model
        if model.isometries_equal(seq.generator, model.identity()):
            raise NotDivergentError("the orbit of the identity is constant")
        try:
            attracting, repelling = model.fixed_points(seq.generator)
        except ValueError:
            return Classification(Case.UNDETERMINED, False)
        o = model.origin
        # gamma^{-n} o -> repelling point, so d(gamma^n x, o) - d(gamma^n y, o)
        # -> b_repelling(x) - b_repelling(y)
        c = model.busemann(o, repelling, seq.seed.x) - model.busemann(o, repelling, seq.seed.y)
        return Classification(Case.II, False, Regular(attracting, attracting, c), {"repelling": repelling})

    raise TypeError(f"unsupported sequence descriptor {seq!r}")


def empirical_limit_check(seq, b, grid: Sequence[ProductPoint], n) -> Any:
    """sup over ``grid`` of |normalized d_max from the n-th term - horofunction of b|.

    ``seq`` may be a structured sequence or a bare ProductPoint (the n-th term).
    """
    p = seq if isinstance(seq, ProductPoint) else seq.at(n)
    model = model_of(p, b)
    o_dist = d_max(p, base_point(model))
    worst = 0 * o_dist
    for z in grid:
        err = abs(d_max(p, z) - o_dist - horofunction_eval(b, z))
        if err > worst:
            worst = err
    return worst


# -- JSON --------------------------------------------------------------------


def boundary_to_json(b) -> dict:
    if isinstance(b, Singular):
        return {"kind": "singular", "factor": b.factor, "xi": encode_ideal(b.xi)}
    if isinstance(b, Regular):
        return {
            "kind": "regular",
            "xi": encode_ideal(b.xi),
            "xi_prime": encode_ideal(b.xi_prime),
            "c": encode_real(b.c),
        }
    raise WrongVariantError(f"not a boundary point: {b!r}")


def boundary_from_json(data: dict, model):
    kind = data.get("kind")
    if kind == "singular":
        return Singular(int(data["factor"]), decode_ideal(data["xi"], model))
    if kind == "regular":
        return Regular(
            decode_ideal(data["xi"], model),
            decode_ideal(data["xi_prime"], model),
            decode_real(data["c"], model),
        )
    raise ValueError(f"unknown boundary kind {kind!r}")
