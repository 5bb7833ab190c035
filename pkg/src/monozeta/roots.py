"""Facet-induced Bernstein-Sato roots and the pole containment check.

Every facet of the Newton polyhedron with normal v and positive offset c
(the facet lies on the hyperplane <v, x> = c) induces the rational number
-(coordinate sum of v) / c as a root of the Bernstein-Sato polynomial of
the monomial ideal.  Each real part of a pole of the Igusa zeta function
must appear among these numbers; this module computes the roots and checks
that containment, reporting a witness facet per pole.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polyhedra import Facet, NewtonPolyhedron
from .zeta import ZetaResult


@dataclass(frozen=True)
class FacetRoot:
    facet: Facet
    root: Fraction

    def to_json(self):
        return {"facet": self.facet.to_json(), "root": str(self.root)}


def facet_roots(poly: NewtonPolyhedron) -> tuple[FacetRoot, ...]:
    """One root per facet not through the origin, sorted by root value.

    Coordinate hyperplane facets (offset 0) bound the polyhedron but carry
    no root; all remaining offsets are positive.
    """
    out = []
    for f in poly.facets:
        if f.offset == 0:
            continue
        if f.offset < 0:
            raise ValueError(f"facet {f} has negative offset")
        out.append(FacetRoot(f, Fraction(-sum(f.normal), f.offset)))
    return tuple(sorted(out, key=lambda fr: (fr.root, fr.facet.normal)))


def log_canonical_threshold(poly: NewtonPolyhedron) -> Fraction:
    """min over facets of (coordinate sum of normal) / offset, offset > 0.

    Equals the negative of the largest facet root.
    """
    roots = facet_roots(poly)
    if not roots:
        raise ValueError("polyhedron has no facet off the origin")
    return -max(fr.root for fr in roots)


@dataclass(frozen=True)
class PoleWitness:
    real_part: Fraction
    order_bound: int
    facets: tuple[Facet, ...]  # facets whose root equals the real part

    @property
    def verified(self) -> bool:
        return bool(self.facets)

    def to_json(self):
        return {
            "real_part": str(self.real_part),
            "order_bound": self.order_bound,
            "verified": self.verified,
            "witness_facets": [f.to_json() for f in self.facets],
        }


@dataclass(frozen=True)
class RootCheck:
    roots: tuple[FacetRoot, ...]
    witnesses: tuple[PoleWitness, ...]

    @property
    def all_verified(self) -> bool:
        return all(w.verified for w in self.witnesses)

    def to_json(self):
        return {
            "roots": [fr.to_json() for fr in self.roots],
            "poles": [w.to_json() for w in self.witnesses],
            "all_verified": self.all_verified,
        }


def verify_pole_roots(result: ZetaResult, poly: NewtonPolyhedron) -> RootCheck:
    """Match every pole real part of the zeta function to a facet root."""
    roots = facet_roots(poly)
    witnesses = []
    for rp, order in result.poles:
        hits = tuple(fr.facet for fr in roots if fr.root == rp)
        witnesses.append(PoleWitness(rp, order, hits))
    return RootCheck(roots, tuple(witnesses))
