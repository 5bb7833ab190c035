"""Exact Igusa zeta functions of monomial ideals.

The pipeline: Newton polyhedron of the ideal, its normal fan, lattice-point
generating functions of the fan cones, and the assembled zeta function as a
rational function in T = p^-s and P = 1/p, with every pole real part checked
against the facet-induced Bernstein-Sato roots.
"""

from .conegf import (
    Grading,
    HalfOpenSimplicialCone,
    interior_lattice_gf,
    lattice_gf,
    parallelepiped_points,
)
from .fan import Cone, Fan, cone_from_rays, normal_fan, triangulate
from .parse import ParseError, parse_ideal
from .polyhedra import Facet, MonomialIdeal, NewtonPolyhedron, newton_polyhedron
from .ring import BinomialFactor, BiPoly, BiRationalFunction, UniRational
from .roots import (
    FacetRoot,
    PoleWitness,
    RootCheck,
    facet_roots,
    log_canonical_threshold,
    verify_pole_roots,
)
from .zeta import (
    DivisorData,
    ZetaResult,
    divisor_data,
    igusa_zeta,
    latex_zeta,
    pole_report,
    principal_zeta,
    zeta_series,
)

__version__ = "0.1.0"

__all__ = [
    "BiPoly",
    "BiRationalFunction",
    "BinomialFactor",
    "Cone",
    "DivisorData",
    "Facet",
    "FacetRoot",
    "Fan",
    "Grading",
    "HalfOpenSimplicialCone",
    "MonomialIdeal",
    "NewtonPolyhedron",
    "ParseError",
    "PoleWitness",
    "RootCheck",
    "UniRational",
    "ZetaResult",
    "cone_from_rays",
    "divisor_data",
    "facet_roots",
    "igusa_zeta",
    "interior_lattice_gf",
    "lattice_gf",
    "latex_zeta",
    "log_canonical_threshold",
    "newton_polyhedron",
    "normal_fan",
    "parallelepiped_points",
    "parse_ideal",
    "pole_report",
    "principal_zeta",
    "triangulate",
    "verify_pole_roots",
    "zeta_series",
]
