"""Parametrized geodesics and their correspondence with the ideal domain.

A :class:`ParamGeodesic` is a model line (canonically parametrized from its
point nearest o) together with a time offset, so ``g(t) = line(t + offset)``.
Reparametrizing is arithmetic on the offset.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, NamedTuple

from .encoding import decode_ideal, decode_real, encode_ideal, encode_real
from .product import ProductPoint, Regular, WrongVariantError, in_omega
from .space import DegenerateLineError, is_infinite, model_of


@dataclass(frozen=True)
class ParamGeodesic:
    line: Any
    offset: Any = 0

    @property
    def model(self):
        return self.line.model

    @property
    def xi_plus(self):
        return self.line.xi_plus

    @property
    def xi_minus(self):
        return self.line.xi_minus

    def __call__(self, t):
        return self.line.point(t + self.offset)

    @property
    def base_point(self):
        return self.line.point(self.offset)

    def reparametrize(self, s) -> "ParamGeodesic":
        """The geodesic t -> g(t + s)."""
        return ParamGeodesic(self.line, self.offset + s)

    @classmethod
    def from_endpoints(cls, xi_plus, xi_minus, offset=0) -> "ParamGeodesic":
        model = model_of(xi_plus, xi_minus)
        return cls(model.geodesic_line(xi_plus, xi_minus), offset)

    def to_json(self) -> dict:
        return {
            "xi_plus": encode_ideal(self.xi_plus),
            "xi_minus": encode_ideal(self.xi_minus),
            "offset": encode_real(self.offset),
        }

    @classmethod
    def from_json(cls, data: dict, model) -> "ParamGeodesic":
        return cls.from_endpoints(
            decode_ideal(data["xi_plus"], model),
            decode_ideal(data["xi_minus"], model),
            decode_real(data["offset"], model),
        )


@dataclass(frozen=True)
class DiagonalPoint:
    """The point (x, x) of the diagonal of X x X."""

    x: Any

    @property
    def model(self):
        return self.x.model


def line_position(line, point):
    """Signed parameter of a point lying on ``line`` (canonical parametrization)."""
    model = line.model
    m = line.base_point
    return (model.busemann(m, line.xi_minus, point) - model.busemann(m, line.xi_plus, point)) / 2


def apply_to_geodesic(gamma, g: ParamGeodesic) -> ParamGeodesic:
    """The geodesic t -> gamma(g(t))."""
    model = g.model
    line = model.apply(gamma, g.line)
    return ParamGeodesic(line, line_position(line, model.apply(gamma, g.base_point)))


def f(g: ParamGeodesic) -> Regular:
    """Limit of (g(n), g(-n)) in the max-boundary."""
    model = g.model
    o, g0 = model.origin, g.base_point
    c = model.busemann(o, g.xi_minus, g0) - model.busemann(o, g.xi_plus, g0)
    return Regular(g.xi_plus, g.xi_minus, c)


def f_inverse(xi_plus, xi_minus, r) -> ParamGeodesic:
    """The unique geodesic g with f(g) = Regular(xi_plus, xi_minus, r)."""
    model = model_of(xi_plus, xi_minus)
    line = model.geodesic_line(xi_plus, xi_minus)
    o, m = model.origin, line.base_point
    # along the line the two Busemann functions have slopes -1 and +1
    at_base = model.busemann(o, xi_minus, m) - model.busemann(o, xi_plus, m)
    return ParamGeodesic(line, (r - at_base) / 2)


def f_inverse_point(b) -> ParamGeodesic:
    if not isinstance(b, Regular):
        raise WrongVariantError("only regular boundary points correspond to geodesics")
    if not in_omega(b):
        raise DegenerateLineError("boundary point lies over the diagonal D, outside the ideal domain")
    return f_inverse(b.xi, b.xi_prime, b.c)


def hopf(g: ParamGeodesic):
    """(g(+inf), g(-inf), b^{g(0)}_{g(+inf)}(o))."""
    model = g.model
    return g.xi_plus, g.xi_minus, model.busemann(g.base_point, g.xi_plus, model.origin)


def h_map(xi_plus, xi_minus, r):
    model = model_of(xi_plus, xi_minus)
    gp = model.gromov_product_ideal(xi_plus, xi_minus, model.origin)
    if is_infinite(gp):
        raise DegenerateLineError("h is undefined over the diagonal D")
    return xi_plus, xi_minus, 2 * (r - gp)


class Residuals(NamedTuple):
    forward: Any
    backward: Any
    offset: Any


def converges_to(seq, g: ParamGeodesic, n) -> Residuals:
    """Residuals at index n of the three convergence conditions towards g."""
    p = seq if isinstance(seq, ProductPoint) else seq.at(n)
    model = model_of(p, g)
    o = model.origin
    target = f(g).c
    return Residuals(
        model.point_visual_distance(p.x, g.xi_plus),
        model.point_visual_distance(p.y, g.xi_minus),
        abs(model.distance(p.x, o) - model.distance(p.y, o) - target),
    )


def project_diagonal(p: ProductPoint) -> DiagonalPoint:
    """Nearest point of the diagonal for d_max: the midpoint of the segment xy."""
    return DiagonalPoint(p.model.midpoint(p.x, p.y))


def rho_tilde(obj) -> DiagonalPoint:
    if isinstance(obj, ProductPoint):
        return project_diagonal(obj)
    if isinstance(obj, ParamGeodesic):
        return DiagonalPoint(obj.base_point)
    if isinstance(obj, Regular):
        return DiagonalPoint(f_inverse_point(obj).base_point)
    raise TypeError(f"rho_tilde is defined on X x X and on geodesics, not {obj!r}")
