"""Horofunction boundary of the max-metric product of a CAT(-1) space.

Two exact-or-numerical model spaces (the Poincare disk and the Cayley tree
of F2), the boundary of (X x X, d_max) in coordinates, the correspondence
between parametrized geodesics and the ideal domain, and the diagonal
action of a cocompact group.
"""

from .disk import DISK, DiskIdealPoint, DiskIsometry, DiskPoint
from .geodesics import ParamGeodesic, f, f_inverse, h_map, hopf, rho_tilde
from .groups import free_group_action, octagon_group
from .product import ProductPoint, Regular, Singular, classify, d_max, horofunction_eval
from .space import INFINITY, busemann, distance, gromov_product, gromov_product_ideal, midpoint, ray, segment
from .tree import TREE, TreeIdealPoint, TreeIsometry, TreePoint

__version__ = "0.1.0"

__all__ = [
    "DISK", "TREE", "INFINITY",
    "DiskPoint", "DiskIdealPoint", "DiskIsometry",
    "TreePoint", "TreeIdealPoint", "TreeIsometry",
    "ProductPoint", "Singular", "Regular", "ParamGeodesic",
    "distance", "busemann", "gromov_product", "gromov_product_ideal", "segment", "ray", "midpoint",
    "d_max", "horofunction_eval", "classify",
    "f", "f_inverse", "hopf", "h_map", "rho_tilde",
    "octagon_group", "free_group_action",
]
