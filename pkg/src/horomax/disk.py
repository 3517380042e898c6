"""Poincare disk model of the hyperbolic plane (curvature -1).

Points are complex numbers ``z`` with ``|z| < 1``.  Alongside ``z`` every point
carries ``gap = 1 - |z|**2`` computed without cancellation: points produced
by isometries or along rays keep an accurate ``gap`` even when ``|z|`` rounds
to within a few ulps of 1, which is what keeps Busemann limits at distance
~25 from the origin accurate to ~1e-10 instead of ~1e-5.

Isometries are SU(1,1) matrices ``[[alpha, beta], [conj(beta), conj(alpha)]]``
acting by ``z -> (alpha z + beta) / (conj(beta) z + conj(alpha))``, optionally
preceded by complex conjugation (orientation reversal).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .space import (
    INFINITY,
    DegenerateLineError,
    ModelMismatchError,
    ModelSpace,
    RayHandle,
    SegmentHandle,
)

TWO_PI = 2.0 * math.pi

#: points with |z| > 1 - BOUNDARY_CLAMP are rejected
BOUNDARY_CLAMP = 1e-12
_MIN_GAP = BOUNDARY_CLAMP * (2.0 - BOUNDARY_CLAMP)

ALGEBRAIC_TOL = 1e-9
LIMIT_TOL = 1e-6
ANGLE_TOL = 1e-9


class BoundaryClampError(ValueError):
    """A disk point was requested too close to (or beyond) the unit circle."""


def _split(a: float) -> tuple[float, float]:
    c = 134217729.0 * a
    hi = c - (c - a)
    return hi, a - hi


def _square_exact(a: float) -> tuple[float, float]:
    p = a * a
    hi, lo = _split(a)
    err = ((hi * hi - p) + 2.0 * hi * lo) + lo * lo
    return p, err


def one_minus_abs2(z: complex) -> float:
    """1 - |z|^2 for a float complex, correctly rounded up to fsum accuracy."""
    px, ex = _square_exact(z.real)
    py, ey = _square_exact(z.imag)
    return math.fsum((1.0, -px, -ex, -py, -ey))


def _sech2(u: float) -> float:
    c = math.cosh(u)
    return 1.0 / (c * c)


@dataclass(frozen=True)
class DiskPoint:
    z: complex
    gap: float = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        z = complex(self.z)
        object.__setattr__(self, "z", z)
        gap = one_minus_abs2(z) if self.gap is None else float(self.gap)
        if not gap >= _MIN_GAP:
            raise BoundaryClampError(
                f"|z| = {abs(z)!r} exceeds 1 - {BOUNDARY_CLAMP:g}; point is (numerically) on the boundary"
            )
        object.__setattr__(self, "gap", gap)

    def __repr__(self):
        return f"DiskPoint({self.z!r})"


@dataclass(frozen=True)
class DiskIdealPoint:
    theta: float

    def __post_init__(self):
        t = math.fmod(float(self.theta), TWO_PI)
        if t < 0:
            t += TWO_PI
        if t >= TWO_PI:
            t = 0.0
        object.__setattr__(self, "theta", t)

    @property
    def unit(self) -> complex:
        return cmath.exp(1j * self.theta)

    @classmethod
    def from_complex(cls, w: complex) -> "DiskIdealPoint":
        return cls(cmath.phase(w))


@dataclass(frozen=True)
class DiskIsometry:
    alpha: complex
    beta: complex
    reflect: bool = False

    @property
    def matrix(self):
        import numpy as np

        a, b = self.alpha, self.beta
        return np.array([[a, b], [b.conjugate(), a.conjugate()]])

    @property
    def determinant(self) -> float:
        return abs(self.alpha) ** 2 - abs(self.beta) ** 2

    @property
    def trace(self) -> float:
        # real trace of the SU(1,1) matrix
        return 2.0 * self.alpha.real

    def is_hyperbolic(self) -> bool:
        return not self.reflect and abs(self.trace) > 2.0

    def _prep(self, z: complex) -> complex:
        return z.conjugate() if self.reflect else z

    def mobius(self, z: complex) -> complex:
        """Raw action on a complex number (no clamping; works on the circle too)."""
        w = self._prep(complex(z))
        return (self.alpha * w + self.beta) / (self.beta.conjugate() * w + self.alpha.conjugate())

    def __call__(self, obj):
        return DISK.apply(self, obj)

    def __matmul__(self, other: "DiskIsometry") -> "DiskIsometry":
        return DISK.compose(self, other)

    def key(self, digits: int = 6) -> tuple:
        """Hashable rounding of the projective matrix, for deduplication."""
        a, b = self.alpha, self.beta
        if a.real < -1e-9 or (abs(a.real) <= 1e-9 and a.imag < 0):
            a, b = -a, -b
        scale = 10**digits
        return (
            self.reflect,
            round(a.real * scale),
            round(a.imag * scale),
            round(b.real * scale),
            round(b.imag * scale),
        )


@dataclass(frozen=True)
class DiskLine:
    """Geodesic line; ``point(t) = frame(tanh(t/2))`` is its canonical parametrization."""

    xi_plus: DiskIdealPoint
    xi_minus: DiskIdealPoint
    frame: DiskIsometry

    def point(self, t: float) -> DiskPoint:
        return DISK.apply(self.frame, _diameter_point(t))

    @property
    def base_point(self) -> DiskPoint:
        return self.point(0.0)


def _diameter_point(t: float) -> DiskPoint:
    """Point at signed distance t from 0 along the positive real axis."""
    return DiskPoint(complex(math.tanh(t / 2.0), 0.0), _sech2(t / 2.0))


def rotation(angle: float) -> DiskIsometry:
    return DiskIsometry(cmath.exp(0.5j * angle), 0j)


def translation(length: float, direction: float = 0.0) -> DiskIsometry:
    """Hyperbolic translation of the given length along the diameter at angle ``direction``."""
    b = math.sinh(length / 2.0) * cmath.exp(1j * direction)
    return DiskIsometry(complex(math.cosh(length / 2.0)), b)


def moving_origin_to(p: DiskPoint) -> DiskIsometry:
    """The transvection taking 0 to p along the diameter through p."""
    s = 1.0 / math.sqrt(p.gap)
    return DiskIsometry(complex(s), p.z * s)


def _to_hyperboloid(p: DiskPoint) -> tuple[float, float, float]:
    g = p.gap
    return (2.0 - g) / g, 2.0 * p.z.real / g, 2.0 * p.z.imag / g


def _from_hyperboloid(x0: float, x1: float, x2: float) -> DiskPoint:
    d = 1.0 + x0
    return DiskPoint(complex(x1 / d, x2 / d), 2.0 / d)


def angular_distance(s: float, t: float) -> float:
    d = abs(s - t) % TWO_PI
    return min(d, TWO_PI - d)


class DiskModel(ModelSpace):
    name = "disk"
    tol = ALGEBRAIC_TOL

    @property
    def origin(self) -> DiskPoint:
        return DiskPoint(0j)

    def point(self, z) -> DiskPoint:
        return DiskPoint(complex(z))

    def ideal(self, theta: float) -> DiskIdealPoint:
        return DiskIdealPoint(theta)

    def _check(self, *objs):
        for obj in objs:
            if getattr(obj, "model", None) is not self:
                raise ModelMismatchError(f"{obj!r} is not a disk-model object")

    # -- metric -------------------------------------------------------------

    def distance(self, x: DiskPoint, y: DiskPoint) -> float:
        self._check(x, y)
        return 2.0 * math.asinh(abs(x.z - y.z) / math.sqrt(x.gap * y.gap))

    def _busemann_at_zero(self, xi: DiskIdealPoint, x: DiskPoint) -> float:
        return 2.0 * math.log(abs(xi.unit - x.z)) - math.log(x.gap)

    def busemann(self, p: DiskPoint, xi: DiskIdealPoint, x: DiskPoint) -> float:
        self._check(p, xi, x)
        # cocycle: b^p = b^0 - b^0(p)
        return self._busemann_at_zero(xi, x) - self._busemann_at_zero(xi, p)

    def gromov_product_ideal(self, xi, eta, base):
        self._check(xi, eta, base)
        chord = abs(xi.unit - eta.unit)
        if angular_distance(xi.theta, eta.theta) <= ANGLE_TOL:
            return INFINITY
        at_zero = -math.log(chord / 2.0)
        shift = 0.5 * (self._busemann_at_zero(xi, base) + self._busemann_at_zero(eta, base))
        return at_zero + shift

    # -- geodesics ----------------------------------------------------------

    def segment(self, x: DiskPoint, y: DiskPoint) -> SegmentHandle:
        self._check(x, y)
        length = self.distance(x, y)
        if length == 0.0:
            return SegmentHandle(x, y, 0.0, lambda t: x)
        hx, hy = _to_hyperboloid(x), _to_hyperboloid(y)
        sl = math.sinh(length)

        def evaluate(t):
            if t == 0:
                return x
            if t == length:
                return y
            u, v = math.sinh(length - t) / sl, math.sinh(t) / sl
            return _from_hyperboloid(*(u * a + v * b for a, b in zip(hx, hy)))

        return SegmentHandle(x, y, length, evaluate)

    def ray(self, origin: DiskPoint, xi: DiskIdealPoint) -> RayHandle:
        self._check(origin, xi)
        frame = self.compose(moving_origin_to(origin), rotation(self.apply(self.inverse(moving_origin_to(origin)), xi).theta))

        def evaluate(t):
            if t == 0:
                return origin
            return self.apply(frame, _diameter_point(t))

        return RayHandle(origin, xi, evaluate)

    def midpoint(self, x: DiskPoint, y: DiskPoint) -> DiskPoint:
        self._check(x, y)
        half = self.distance(x, y) / 2.0
        if half == 0.0:
            return x
        c = 2.0 * math.cosh(half)
        hx, hy = _to_hyperboloid(x), _to_hyperboloid(y)
        return _from_hyperboloid(*((a + b) / c for a, b in zip(hx, hy)))

    def geodesic_line(self, xi_plus: DiskIdealPoint, xi_minus: DiskIdealPoint) -> DiskLine:
        self._check(xi_plus, xi_minus)
        if angular_distance(xi_plus.theta, xi_minus.theta) <= ANGLE_TOL:
            raise DegenerateLineError("a geodesic line needs two distinct ideal endpoints")
        # endpoints at psi +- delta; the line is the image of the imaginary
        # diameter under the real translation taking 0 to r
        delta = ((xi_plus.theta - xi_minus.theta) % TWO_PI) / 2.0
        psi = xi_minus.theta + delta
        r = math.tan((math.pi / 2.0 - delta) / 2.0)
        s = 1.0 / math.sqrt((1.0 - r) * (1.0 + r))
        shift = DiskIsometry(complex(s), complex(r * s))
        frame = self.compose(rotation(psi), self.compose(shift, rotation(math.pi / 2.0)))
        return DiskLine(xi_plus, xi_minus, frame)

    # -- isometries ---------------------------------------------------------

    def identity(self) -> DiskIsometry:
        return DiskIsometry(1 + 0j, 0j)

    def compose(self, g: DiskIsometry, h: DiskIsometry) -> DiskIsometry:
        a2, b2 = (h.alpha.conjugate(), h.beta.conjugate()) if g.reflect else (h.alpha, h.beta)
        alpha = g.alpha * a2 + g.beta * b2.conjugate()
        beta = g.alpha * b2 + g.beta * a2.conjugate()
        return DiskIsometry(alpha, beta, g.reflect != h.reflect)

    def inverse(self, g: DiskIsometry) -> DiskIsometry:
        if g.reflect:
            return DiskIsometry(g.alpha, -g.beta.conjugate(), True)
        return DiskIsometry(g.alpha.conjugate(), -g.beta)

    def isometries_equal(self, g: DiskIsometry, h: DiskIsometry, tol: float = ALGEBRAIC_TOL) -> bool:
        if g.reflect != h.reflect:
            return False
        same = max(abs(g.alpha - h.alpha), abs(g.beta - h.beta))
        opposite = max(abs(g.alpha + h.alpha), abs(g.beta + h.beta))
        return min(same, opposite) <= tol

    def apply(self, gamma: DiskIsometry, obj):
        if isinstance(obj, DiskPoint):
            w = gamma._prep(obj.z)
            q = gamma.beta.conjugate() * w + gamma.alpha.conjugate()
            return DiskPoint((gamma.alpha * w + gamma.beta) / q, obj.gap / (abs(q) ** 2))
        if isinstance(obj, DiskIdealPoint):
            return DiskIdealPoint.from_complex(gamma.mobius(obj.unit))
        if isinstance(obj, DiskLine):
            return self.geodesic_line(self.apply(gamma, obj.xi_plus), self.apply(gamma, obj.xi_minus))
        raise ModelMismatchError(f"cannot apply a disk isometry to {obj!r}")

    def fixed_points(self, g: DiskIsometry) -> tuple[DiskIdealPoint, DiskIdealPoint]:
        """(attracting, repelling) boundary fixed points of a hyperbolic isometry."""
        if not g.is_hyperbolic():
            raise ValueError("only orientation-preserving hyperbolic isometries have an axis")
        a, b = g.alpha, g.beta
        # conj(b) z^2 + (conj(a) - a) z - b = 0
        qa, qb, qc = b.conjugate(), a.conjugate() - a, -b
        disc = cmath.sqrt(qb * qb - 4 * qa * qc)
        roots = [(-qb + disc) / (2 * qa), (-qb - disc) / (2 * qa)]
        roots.sort(key=lambda z: -abs(qa * z + a.conjugate()))
        return DiskIdealPoint.from_complex(roots[0]), DiskIdealPoint.from_complex(roots[1])

    def orbit_distance(self, g: DiskIsometry, x: DiskPoint) -> float:
        """d(g x, 0) without forming g x (which may lie beyond the clamp)."""
        w = g._prep(x.z)
        return 2.0 * math.asinh(abs(g.alpha * w + g.beta) / math.sqrt(x.gap))

    def orbit_direction(self, g: DiskIsometry, x: DiskPoint) -> DiskIdealPoint:
        """Radial projection of g x to the circle, again without clamping."""
        return DiskIdealPoint.from_complex(g.mobius(x.z))

    # -- comparisons --------------------------------------------------------

    def ideal_equal(self, xi, eta) -> bool:
        return angular_distance(xi.theta, eta.theta) <= ANGLE_TOL

    def points_equal(self, x, y) -> bool:
        return self.distance(x, y) <= self.tol

    def visual_distance(self, xi, eta) -> float:
        return angular_distance(xi.theta, eta.theta)

    def point_visual_distance(self, x: DiskPoint, xi: DiskIdealPoint) -> float:
        if x.z == 0:
            return math.pi
        return angular_distance(cmath.phase(x.z), xi.theta)


DISK = DiskModel()
DiskPoint.model = DISK
DiskIdealPoint.model = DISK
DiskIsometry.model = DISK
DiskLine.model = DISK
