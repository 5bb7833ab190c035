"""Normal fans of Newton polyhedra and the cone operations built on them.

Cones are pointed rational cones inside the nonnegative orthant.  Each one
stores its extreme rays together with an exact inequality description
(facet covectors lifted from the span, plus a +/- pair for every covector
vanishing on the span), so membership and relative-interior tests are pure
integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .dd import extreme_rays
from .linalg import (Vec, dot, left_kernel_basis, primitive, rank,
                     saturation_basis, scale_to_int, solve)
from .polyhedra import MonomialIdeal, NewtonPolyhedron


def _unit(i, n):
    return tuple(int(j == i) for j in range(n))


@dataclass(frozen=True)
class Cone:
    """Pointed cone: primitive extreme rays plus a supporting description."""

    n: int
    rays: tuple[Vec, ...]
    ineqs: tuple[Vec, ...]
    dim: int
    vertex: Vec | None = field(default=None, compare=False)

    def contains(self, x) -> bool:
        return all(dot(h, x) >= 0 for h in self.ineqs)

    def contains_relint(self, x) -> bool:
        """Is x in the relative interior?  Exact for the stored description."""
        for h in self.ineqs:
            v = dot(h, x)
            if v < 0:
                return False
            if v == 0 and any(dot(h, r) != 0 for r in self.rays):
                return False
        return True

    def is_simplicial(self) -> bool:
        return len(self.rays) == self.dim

    def with_vertex(self, vertex):
        return Cone(self.n, self.rays, self.ineqs, self.dim, vertex)

    def to_json(self):
        data = {"rays": [list(r) for r in self.rays], "dim": self.dim}
        if self.vertex is not None:
            data["vertex"] = list(self.vertex)
        return data


def cone_from_rays(generators, n, vertex=None) -> Cone:
    """Canonical Cone spanned by the given nonzero generators.

    Non-extreme and duplicate generators are filtered out.  The cone must be
    pointed (always true inside the orthant).
    """
    gens = sorted({primitive(g) for g in generators if any(g)})
    if not gens:
        ineqs = tuple(h for i in range(n) for h in (_unit(i, n), tuple(-x for x in _unit(i, n))))
        return Cone(n, (), ineqs, 0, vertex)
    basis = saturation_basis(gens, n)
    r = len(basis)
    coords = []
    transpose = [tuple(b[i] for b in basis) for i in range(n)]
    for g in gens:
        c = solve(transpose, g)
        if any(x.denominator != 1 for x in c):
            raise AssertionError("generator lies outside its saturated span lattice")
        coords.append(tuple(int(x) for x in c))
    facets_small = extreme_rays(coords, r)
    rays_small = extreme_rays(facets_small, r)
    rays = tuple(sorted(primitive(tuple(dot(y, col) for col in zip(*basis)))
                        for y in rays_small))

    lifted = []
    for h in facets_small:
        sol = solve(basis, h)
        lifted.append(scale_to_int(sol))
    kernel = left_kernel_basis([tuple(g[i] for g in gens) for i in range(n)], nrows=n)
    ineqs = sorted(lifted) + sorted(
        h for k in kernel for h in (tuple(k), tuple(-x for x in k)))
    return Cone(n, rays, tuple(ineqs), r, vertex)


@dataclass(frozen=True)
class Fan:
    """All cones of a normal fan, with the face relation by index pairs."""

    n: int
    cones: tuple[Cone, ...]
    rays: tuple[Vec, ...]
    relation: frozenset[tuple[int, int]]  # (face index, cone index)

    @cached_property
    def _by_rayset(self):
        return {frozenset(c.rays): i for i, c in enumerate(self.cones)}

    def index_of(self, cone: Cone) -> int:
        return self._by_rayset[frozenset(cone.rays)]

    def maximal_cones(self):
        return tuple(c for c in self.cones if c.dim == self.n)

    def faces_of(self, cone: Cone):
        """Fan cones that are faces of the given fan cone (itself included)."""
        j = self.index_of(cone)
        return tuple(self.cones[i] for i, jj in sorted(self.relation) if jj == j)

    def locate(self, a) -> Cone:
        """The unique fan cone whose relative interior contains a (a >= 0)."""
        if any(x < 0 for x in a):
            raise ValueError("point must lie in the nonnegative orthant")
        for c in self.cones:
            if c.contains_relint(a):
                return c
        raise LookupError(f"no cone of the fan contains {a}")

    def to_json(self):
        ray_index = {r: i for i, r in enumerate(self.rays)}
        return {
            "n": self.n,
            "rays": [list(r) for r in self.rays],
            "cones": [
                {"rays": [ray_index[r] for r in c.rays], "dim": c.dim,
                 "vertex": list(c.vertex)}
                for c in self.cones
            ],
            "relation": sorted(list(p) for p in self.relation),
        }


def _face_raysets(cone: Cone):
    """Every subset of rays spanning a face, found by iterated facet cuts."""
    seen = {frozenset(cone.rays)}
    stack = [cone.rays]
    while stack:
        current = stack.pop()
        for h in cone.ineqs:
            cut = tuple(r for r in current if dot(h, r) == 0)
            key = frozenset(cut)
            if cut != current and key not in seen:
                seen.add(key)
                stack.append(cut)
    return seen


def normal_fan(poly: NewtonPolyhedron) -> Fan:
    """The normal fan of the Newton polyhedron, supported on the orthant.

    Maximal cones are the vertex normal cones; every cone carries the
    lexicographically smallest vertex attaining the minimum on it.
    """
    n = poly.n

    def nu(a):
        return poly.min_pairing(a)

    raysets = set()
    for w in poly.vertices:
        tight = [f.normal for f in poly.facets if dot(w, f.normal) == f.offset]
        sigma = cone_from_rays(tight, n)
        if sigma.dim != n:
            raise AssertionError(f"normal cone of vertex {w} is not full-dimensional")
        raysets |= _face_raysets(sigma)

    cones = []
    for rayset in raysets:
        cone = cone_from_rays(rayset, n)
        eligible = [w for w in poly.vertices
                    if all(dot(w, r) == nu(r) for r in cone.rays)]
        cones.append(cone.with_vertex(min(eligible)))
    cones.sort(key=lambda c: (c.dim, c.rays))

    relation = frozenset(
        (i, j)
        for i, ci in enumerate(cones)
        for j, cj in enumerate(cones)
        if set(ci.rays) <= set(cj.rays)
    )
    rays = tuple(sorted(c.rays[0] for c in cones if c.dim == 1))
    return Fan(n, tuple(cones), rays, relation)


def _facets_of_cone(cone: Cone):
    """Codimension-one faces, as canonical cones (sorted for determinism)."""
    seen = set()
    out = []
    for h in cone.ineqs:
        cut = tuple(r for r in cone.rays if dot(h, r) == 0)
        key = frozenset(cut)
        if key in seen or len(cut) == len(cone.rays):
            continue
        if rank(cut) == cone.dim - 1:
            seen.add(key)
            out.append(cone_from_rays(cut, cone.n))
    out.sort(key=lambda c: c.rays)
    return out


def triangulate(cone: Cone) -> list[Cone]:
    """Pulling triangulation of the cone using only its own rays.

    The apex at each level is the lexicographically smallest ray, which
    makes the decomposition deterministic and consistent across shared
    faces.
    """
    if cone.dim == 0 or cone.is_simplicial():
        return [cone]
    apex = cone.rays[0]
    cells = []
    for facet in _facets_of_cone(cone):
        if apex in facet.rays:
            continue
        for sub in triangulate(facet):
            cells.append(cone_from_rays(sub.rays + (apex,), cone.n))
    return cells


def cone_faces(cone: Cone) -> list[tuple[Cone, int]]:
    """All faces of the cone, each with the sign (-1)^(dim cone - dim face).

    Includes the zero face and the cone itself; ordered by (dim, rays).
    """
    faces = [cone_from_rays(rayset, cone.n) for rayset in _face_raysets(cone)]
    faces.sort(key=lambda c: (c.dim, c.rays))
    return [(f, (-1) ** (cone.dim - f.dim)) for f in faces]
