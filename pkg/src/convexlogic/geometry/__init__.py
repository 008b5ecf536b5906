from .complex import (
    ComplexCheck, FacetCheck, SimplicialComplex, carrier, check_complex, dimension, face_key,
    face_poset, facet_incidence_check, locate, open_star, parse_face_key,
)
from .convex import Membership, check_membership_certificate, convex_membership, face_functional
from .linalg import Point, affine_rank, as_point, format_point, parse_point, parse_rational
from .lp import LPResult, linprog_max
from .nerve import HullCheck, chain_hull_disjointness, nabla, nerve
from .simplices import Barycentric, DegenerateSimplex, NotInAffineHull, Simplex, barycentric_coords, standard_simplex

__all__ = [
    "ComplexCheck", "FacetCheck", "SimplicialComplex", "carrier", "check_complex", "dimension",
    "face_key", "face_poset", "facet_incidence_check", "locate", "open_star", "parse_face_key",
    "Membership", "check_membership_certificate", "convex_membership", "face_functional",
    "Point", "affine_rank", "as_point", "format_point", "parse_point", "parse_rational",
    "LPResult", "linprog_max", "HullCheck", "chain_hull_disjointness", "nabla", "nerve",
    "Barycentric", "DegenerateSimplex", "NotInAffineHull", "Simplex", "barycentric_coords",
    "standard_simplex",
]
