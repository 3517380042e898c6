"""Model-space contract and generic quantities derived from it.

Every concrete CAT(-1) model (the Poincare disk, the Cayley tree of F2)
implements :class:`ModelSpace`.  Points, ideal points and isometries of a
model carry a ``model`` attribute so that the generic functions below can
dispatch on their arguments and reject mixed-model input.
"""

from __future__ import annotations

import abc
from dataclasses import dataclass
from typing import Any, Callable


class ModelMismatchError(TypeError):
    """Raised when objects from different model spaces are combined."""


class DegenerateLineError(ValueError):
    """Raised when a geodesic line is requested between equal ideal points."""


class _Infinity:
    """The value +infinity of the extended reals.

    Only Gromov products of ideal points produce it; it is a distinct object
    rather than ``float('inf')`` so that callers must handle it explicitly.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()


def is_infinite(value: Any) -> bool:
    return value is INFINITY


@dataclass(frozen=True)
class SegmentHandle:
    """Unit-speed parametrization of the geodesic segment from ``start`` to ``end``."""

    start: Any
    end: Any
    length: Any
    evaluator: Callable[[Any], Any]

    def __call__(self, t):
        if t < 0 or t > self.length:
            raise ValueError(f"parameter {t} outside [0, {self.length}]")
        return self.evaluator(t)


@dataclass(frozen=True)
class RayHandle:
    """Unit-speed ray from ``origin`` towards the ideal point ``target``."""

    origin: Any
    target: Any
    evaluator: Callable[[Any], Any]

    def __call__(self, t):
        if t < 0:
            raise ValueError(f"ray parameter must be nonnegative, got {t}")
        return self.evaluator(t)


class ModelSpace(abc.ABC):
    """A proper CAT(-1) space with its ideal boundary and isometry carrier."""

    name: str
    #: tolerance for algebraic identities (0 for exact models)
    tol: float = 0.0

    @property
    @abc.abstractmethod
    def origin(self):
        """The base point o used for all normalizations."""

    @abc.abstractmethod
    def distance(self, x, y): ...

    @abc.abstractmethod
    def busemann(self, p, xi, x):
        """Busemann function of ``xi`` normalized to vanish at ``p``, evaluated at ``x``."""

    @abc.abstractmethod
    def gromov_product_ideal(self, xi, eta, base):
        """Gromov product of two ideal points seen from ``base`` (INFINITY if equal)."""

    @abc.abstractmethod
    def segment(self, x, y) -> SegmentHandle: ...

    @abc.abstractmethod
    def ray(self, origin, xi) -> RayHandle: ...

    @abc.abstractmethod
    def midpoint(self, x, y): ...

    @abc.abstractmethod
    def geodesic_line(self, xi_plus, xi_minus):
        """Line with the given endpoints, parametrized from its point nearest o."""

    @abc.abstractmethod
    def apply(self, gamma, obj):
        """Act by the isometry ``gamma`` on a point, ideal point or line."""

    @abc.abstractmethod
    def ideal_equal(self, xi, eta) -> bool: ...

    @abc.abstractmethod
    def points_equal(self, x, y) -> bool: ...

    @abc.abstractmethod
    def visual_distance(self, xi, eta):
        """A metric on the ideal boundary (0 iff equal)."""

    @abc.abstractmethod
    def point_visual_distance(self, x, xi):
        """How far the point ``x`` is, seen from o, from the ideal point ``xi``."""

    @abc.abstractmethod
    def identity(self):
        """The identity isometry."""

    @abc.abstractmethod
    def compose(self, g, h):
        """The isometry ``g o h``."""

    @abc.abstractmethod
    def inverse(self, g): ...

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"


def model_of(*objs) -> ModelSpace:
    """Common model of the given objects; raises ModelMismatchError otherwise."""
    model = None
    for obj in objs:
        m = getattr(obj, "model", None)
        if m is None:
            raise ModelMismatchError(f"{obj!r} does not belong to a model space")
        if model is None:
            model = m
        elif m is not model:
            raise ModelMismatchError(f"cannot combine {model.name} and {m.name} objects")
    if model is None:
        raise ValueError("no objects given")
    return model


def distance(x, y):
    return model_of(x, y).distance(x, y)


def gromov_product(x, y, base):
    """(x|y)_base = 1/2 (d(base, x) + d(base, y) - d(x, y))."""
    model = model_of(x, y, base)
    d = model.distance
    value = (d(base, x) + d(base, y) - d(x, y)) / 2
    # cancellation can leave a tiny negative residue in floating point
    if model.tol and value < 0:
        return 0.0
    return value


def gromov_product_ideal(xi, eta, base):
    return model_of(xi, eta, base).gromov_product_ideal(xi, eta, base)


def busemann(normalizer, xi, x):
    return model_of(normalizer, xi, x).busemann(normalizer, xi, x)


def segment(x, y) -> SegmentHandle:
    return model_of(x, y).segment(x, y)


def ray(origin, xi) -> RayHandle:
    return model_of(origin, xi).ray(origin, xi)


def midpoint(x, y):
    return model_of(x, y).midpoint(x, y)
