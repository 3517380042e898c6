"""Text encodings shared by the JSON and CSV outputs.

Reals are written as strings: floats with 17 significant digits, rationals
as ``"p/q"``.  Ideal points are an angle (disk) or ``head,(cycle)`` (tree).
"""

from __future__ import annotations

from fractions import Fraction

from .disk import DISK, DiskIdealPoint, DiskPoint
from .space import INFINITY, ModelSpace
from .tree import TREE, TreeIdealPoint, TreePoint

MODELS = {"disk": DISK, "tree": TREE}


def get_model(name: str) -> ModelSpace:
    try:
        return MODELS[name]
    except KeyError:
        raise ValueError(f"unknown model {name!r}; expected one of {sorted(MODELS)}") from None


def encode_real(value) -> str:
    if value is INFINITY:
        return "inf"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return format(float(value), ".17g")


def decode_real(text: str, model: ModelSpace):
    text = str(text).strip()
    if model is TREE:
        return Fraction(text)
    if "/" in text:
        return float(Fraction(text))
    return float(text)


def encode_ideal(xi) -> str:
    if isinstance(xi, DiskIdealPoint):
        return format(xi.theta, ".17g")
    if isinstance(xi, TreeIdealPoint):
        return str(xi)
    raise TypeError(f"not an ideal point: {xi!r}")


def decode_ideal(text: str, model: ModelSpace):
    if model is DISK:
        return DiskIdealPoint(float(text))
    return TreeIdealPoint.parse(text)


def encode_point(x) -> str:
    if isinstance(x, DiskPoint):
        return f"{x.z.real:.17g},{x.z.imag:.17g}"
    if isinstance(x, TreePoint):
        return str(x)
    raise TypeError(f"not a point: {x!r}")


def decode_point(text: str, model: ModelSpace):
    text = str(text).strip()
    if model is DISK:
        if "," in text:
            re, im = text.split(",")
            return DiskPoint(complex(float(re), float(im)))
        return DiskPoint(complex(text.replace(" ", "")))
    return TreePoint.parse(text)
