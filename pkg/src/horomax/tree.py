"""The Cayley tree of the free group F2 = <a, b> with unit edges, in exact arithmetic.

Letters are ``a, b`` and their inverses ``A, B``.  A point is a reduced word
(the vertex below it, seen from the identity vertex o) plus an optional
outgoing letter and a rational offset along that edge.  Ideal points are
eventually periodic infinite reduced words ``head . cycle^inf``.

Text format: vertices are words (``""`` or ``"o"`` for the identity), edge
points are ``word:letter:p/q``; ideal points are ``head,(cycle)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .space import (
    INFINITY,
    DegenerateLineError,
    ModelMismatchError,
    ModelSpace,
    RayHandle,
    SegmentHandle,
)

LETTERS = "aAbB"


class InvalidAddressError(ValueError):
    """A word, point or boundary descriptor that is not reduced or well formed."""


def inverse_letter(c: str) -> str:
    return c.swapcase()


def inverse_word(w: str) -> str:
    return w[::-1].swapcase()


def is_reduced(w: str) -> bool:
    return all(c in LETTERS for c in w) and all(w[i] != w[i + 1].swapcase() for i in range(len(w) - 1))


def reduce_word(w: str) -> str:
    out: list[str] = []
    for c in w:
        if c not in LETTERS:
            raise InvalidAddressError(f"unknown letter {c!r}")
        if out and out[-1] == c.swapcase():
            out.pop()
        else:
            out.append(c)
    return "".join(out)


def _common_prefix(s: str, t: str) -> int:
    n = 0
    for a, b in zip(s, t):
        if a != b:
            break
        n += 1
    return n


def _as_fraction(t) -> Fraction:
    if isinstance(t, float):
        raise TypeError("tree coordinates are exact; pass int or Fraction, not float")
    return Fraction(t)


@dataclass(frozen=True)
class TreePoint:
    word: str = ""
    direction: str | None = None
    offset: Fraction = Fraction(0)

    def __post_init__(self):
        offset = _as_fraction(self.offset)
        object.__setattr__(self, "offset", offset)
        if not is_reduced(self.word):
            raise InvalidAddressError(f"word {self.word!r} is not reduced")
        if not 0 <= offset < 1:
            raise InvalidAddressError(f"offset {offset} not in [0, 1)")
        if offset == 0:
            object.__setattr__(self, "direction", None)
            return
        d = self.direction
        if d is None or len(d) != 1 or d not in LETTERS:
            raise InvalidAddressError("a point inside an edge needs a direction letter")
        if self.word and d == inverse_letter(self.word[-1]):
            raise InvalidAddressError(f"direction {d!r} cancels the last letter of {self.word!r}")

    @property
    def depth(self) -> Fraction:
        """Distance to the identity vertex."""
        return len(self.word) + self.offset

    @property
    def letters(self) -> str:
        """Letters of the path from o that reaches this point."""
        return self.word + self.direction if self.offset else self.word

    @property
    def is_vertex(self) -> bool:
        return self.offset == 0

    def __str__(self):
        if self.offset == 0:
            return self.word or "o"
        return f"{self.word}:{self.direction}:{self.offset}"

    @classmethod
    def parse(cls, text: str) -> "TreePoint":
        text = text.strip()
        if text in ("", "o", "e"):
            return cls()
        parts = text.split(":")
        if len(parts) == 1:
            return cls(parts[0])
        if len(parts) == 3:
            return cls(parts[0] if parts[0] != "o" else "", parts[1], Fraction(parts[2]))
        raise InvalidAddressError(f"cannot parse tree point {text!r}")


def point_on(letters: str, depth) -> TreePoint:
    """The point at the given depth on the path from o spelled by ``letters``."""
    depth = _as_fraction(depth)
    n = math.floor(depth)
    frac = depth - n
    if frac == 0:
        return TreePoint(letters[:n])
    if len(letters) <= n:
        raise InvalidAddressError("path too short for requested depth")
    return TreePoint(letters[:n], letters[n], frac)


@dataclass(frozen=True)
class TreeIdealPoint:
    head: str
    cycle: str

    def __post_init__(self):
        head, cycle = self.head, self.cycle
        if not cycle:
            raise InvalidAddressError("cycle must be nonempty")
        if not is_reduced(head + cycle) or not is_reduced(cycle + cycle):
            raise InvalidAddressError(f"{head},({cycle}) is not an infinite reduced word")
        # shortest head: absorb trailing head letters into a rotated cycle
        while head and head[-1] == cycle[-1]:
            head = head[:-1]
            cycle = cycle[-1] + cycle[:-1]
        # primitive cycle
        n = len(cycle)
        for p in range(1, n + 1):
            if n % p == 0 and cycle[:p] * (n // p) == cycle:
                cycle = cycle[:p]
                break
        object.__setattr__(self, "head", head)
        object.__setattr__(self, "cycle", cycle)

    def prefix(self, n: int) -> str:
        """First n letters of the infinite word."""
        if n <= len(self.head):
            return self.head[:n]
        reps = (n - len(self.head)) // len(self.cycle) + 1
        return (self.head + self.cycle * reps)[:n]

    def __str__(self):
        return f"{self.head},({self.cycle})"

    @classmethod
    def parse(cls, text: str) -> "TreeIdealPoint":
        text = text.strip()
        head, sep, rest = text.partition(",")
        if not sep or not (rest.startswith("(") and rest.endswith(")")):
            raise InvalidAddressError(f"cannot parse ideal point {text!r}; expected head,(cycle)")
        return cls(head, rest[1:-1])


@dataclass(frozen=True)
class TreeIsometry:
    """Left multiplication by a reduced word."""

    word: str = ""

    def __post_init__(self):
        if not is_reduced(self.word):
            object.__setattr__(self, "word", reduce_word(self.word))

    def __call__(self, obj):
        return TREE.apply(self, obj)

    def __matmul__(self, other: "TreeIsometry") -> "TreeIsometry":
        return TREE.compose(self, other)


@dataclass(frozen=True)
class TreeLine:
    xi_plus: TreeIdealPoint
    xi_minus: TreeIdealPoint

    @property
    def junction(self) -> int:
        """Depth of the vertex of the line nearest o."""
        return TREE.ideal_common_prefix(self.xi_plus, self.xi_minus)

    def point(self, t) -> TreePoint:
        t = _as_fraction(t)
        k = self.junction
        if t >= 0:
            target, depth = self.xi_plus, k + t
        else:
            target, depth = self.xi_minus, k - t
        return point_on(target.prefix(math.floor(depth) + 1), depth)

    @property
    def base_point(self) -> TreePoint:
        return self.point(0)


class TreeModel(ModelSpace):
    name = "tree"
    tol = 0

    @property
    def origin(self) -> TreePoint:
        return TreePoint()

    def point(self, word: str = "", direction: str | None = None, offset=0) -> TreePoint:
        return TreePoint(word, direction, Fraction(offset))

    def ideal(self, head: str, cycle: str) -> TreeIdealPoint:
        return TreeIdealPoint(head, cycle)

    def _check(self, *objs):
        for obj in objs:
            if getattr(obj, "model", None) is not self:
                raise ModelMismatchError(f"{obj!r} is not a tree-model object")

    # -- combinatorics ------------------------------------------------------

    def ideal_common_prefix(self, xi: TreeIdealPoint, eta: TreeIdealPoint):
        """Length of the common prefix of two infinite words (INFINITY if equal)."""
        if xi == eta:
            return INFINITY
        bound = max(len(xi.head), len(eta.head)) + math.lcm(len(xi.cycle), len(eta.cycle)) + 1
        return _common_prefix(xi.prefix(bound), eta.prefix(bound))

    def _meet_depth(self, x: TreePoint, xi: TreeIdealPoint) -> Fraction:
        """Depth at which the ray from o to ``xi`` leaves the path o -> x."""
        letters = x.letters
        k = _common_prefix(letters, xi.prefix(len(letters)))
        return min(Fraction(k), x.depth)

    # -- metric -------------------------------------------------------------

    def distance(self, x: TreePoint, y: TreePoint) -> Fraction:
        self._check(x, y)
        k = _common_prefix(x.letters, y.letters)
        m = min(Fraction(k), x.depth, y.depth)
        return x.depth + y.depth - 2 * m

    def _busemann_at_o(self, xi: TreeIdealPoint, x: TreePoint) -> Fraction:
        return x.depth - 2 * self._meet_depth(x, xi)

    def busemann(self, p: TreePoint, xi: TreeIdealPoint, x: TreePoint) -> Fraction:
        self._check(p, xi, x)
        return self._busemann_at_o(xi, x) - self._busemann_at_o(xi, p)

    def gromov_product_ideal(self, xi, eta, base):
        self._check(xi, eta, base)
        k = self.ideal_common_prefix(xi, eta)
        if k is INFINITY:
            return INFINITY
        return k + (self._busemann_at_o(xi, base) + self._busemann_at_o(eta, base)) / 2

    # -- geodesics ----------------------------------------------------------

    def segment(self, x: TreePoint, y: TreePoint) -> SegmentHandle:
        self._check(x, y)
        k = _common_prefix(x.letters, y.letters)
        m = min(Fraction(k), x.depth, y.depth)
        up = x.depth - m
        length = up + y.depth - m
        xl, yl = x.letters, y.letters

        def evaluate(t):
            t = _as_fraction(t)
            if t <= up:
                return point_on(xl, x.depth - t)
            return point_on(yl, m + (t - up))

        return SegmentHandle(x, y, length, evaluate)

    def ray(self, origin: TreePoint, xi: TreeIdealPoint) -> RayHandle:
        self._check(origin, xi)
        m = self._meet_depth(origin, xi)
        up = origin.depth - m
        ol = origin.letters

        def evaluate(t):
            t = _as_fraction(t)
            if t <= up:
                return point_on(ol, origin.depth - t)
            depth = m + (t - up)
            return point_on(xi.prefix(math.floor(depth) + 1), depth)

        return RayHandle(origin, xi, evaluate)

    def midpoint(self, x: TreePoint, y: TreePoint) -> TreePoint:
        seg = self.segment(x, y)
        return seg.evaluator(seg.length / 2)

    def geodesic_line(self, xi_plus: TreeIdealPoint, xi_minus: TreeIdealPoint) -> TreeLine:
        self._check(xi_plus, xi_minus)
        if xi_plus == xi_minus:
            raise DegenerateLineError("a geodesic line needs two distinct ideal endpoints")
        return TreeLine(xi_plus, xi_minus)

    # -- isometries ---------------------------------------------------------

    def identity(self) -> TreeIsometry:
        return TreeIsometry("")

    def compose(self, g: TreeIsometry, h: TreeIsometry) -> TreeIsometry:
        return TreeIsometry(reduce_word(g.word + h.word))

    def inverse(self, g: TreeIsometry) -> TreeIsometry:
        return TreeIsometry(inverse_word(g.word))

    def isometries_equal(self, g: TreeIsometry, h: TreeIsometry) -> bool:
        return g.word == h.word

    def apply(self, gamma: TreeIsometry, obj):
        if isinstance(obj, TreePoint):
            u = reduce_word(gamma.word + obj.word)
            if obj.offset == 0:
                return TreePoint(u)
            d = obj.direction
            if u and u[-1] == inverse_letter(d):
                # the edge now points back towards o
                return TreePoint(u[:-1], u[-1], 1 - obj.offset)
            return TreePoint(u, d, obj.offset)
        if isinstance(obj, TreeIdealPoint):
            c = obj.cycle
            reps = len(gamma.word) // len(c) + 1
            head = reduce_word(gamma.word + obj.head + c * reps)
            return TreeIdealPoint(head, c)
        if isinstance(obj, TreeLine):
            return TreeLine(self.apply(gamma, obj.xi_plus), self.apply(gamma, obj.xi_minus))
        raise ModelMismatchError(f"cannot apply a tree isometry to {obj!r}")

    def fixed_points(self, g: TreeIsometry) -> tuple[TreeIdealPoint, TreeIdealPoint]:
        """(attracting, repelling) ends of the axis of a nontrivial element."""
        w = g.word
        if not w:
            raise ValueError("the identity has no axis")
        u = ""
        while len(w) > 1 and w[0] == inverse_letter(w[-1]):
            u += w[0]
            w = w[1:-1]
        return TreeIdealPoint(u, w), TreeIdealPoint(u, inverse_word(w))

    def orbit_distance(self, g: TreeIsometry, x: TreePoint) -> Fraction:
        return self.apply(g, x).depth

    # -- comparisons --------------------------------------------------------

    def ideal_equal(self, xi, eta) -> bool:
        return xi == eta

    def points_equal(self, x, y) -> bool:
        return x == y

    def visual_distance(self, xi, eta) -> Fraction:
        k = self.ideal_common_prefix(xi, eta)
        return Fraction(0) if k is INFINITY else Fraction(1, 2**k)

    def point_visual_distance(self, x: TreePoint, xi: TreeIdealPoint) -> Fraction:
        return Fraction(1, 2 ** math.floor(self._meet_depth(x, xi)))


TREE = TreeModel()
TreePoint.model = TREE
TreeIdealPoint.model = TREE
TreeIsometry.model = TREE
TreeLine.model = TREE
