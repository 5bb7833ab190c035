"""The Igusa zeta function of a monomial ideal, assembled over the normal fan.

With T = p^-s and P = 1/p the local zeta function of a monomial ideal is

    (1 - P)^n * sum over fan cones of the interior generating function
                of the cone, graded by (minimizing vertex, all-ones),

a rational function whose denominator factors 1 - T^a P^b record, per fan
ray v, the numerical data a = vanishing order along v and b = coordinate sum
of v.  Candidate pole real parts are the ratios -b/a; the report groups the
reduced denominator by that ratio.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .conegf import Grading, lattice_gf
from .fan import Fan, normal_fan
from .linalg import Vec, dot
from .polyhedra import MonomialIdeal, NewtonPolyhedron, newton_polyhedron
from .ring import BinomialFactor, BiPoly, BiRationalFunction


@dataclass(frozen=True)
class DivisorData:
    """Numerical data of the exceptional divisor attached to one fan ray."""

    ray: Vec
    k: int  # multiplicity in the relative canonical divisor: coord sum - 1
    a: int  # vanishing order of the ideal along the ray

    @property
    def contributes(self) -> bool:
        return self.a > 0

    @property
    def candidate_real_part(self) -> Fraction | None:
        """-(k+1)/a, the only real part this divisor can contribute."""
        if self.a == 0:
            return None
        return Fraction(-(self.k + 1), self.a)

    def to_json(self):
        cand = self.candidate_real_part
        return {
            "ray": list(self.ray),
            "k": self.k,
            "a": self.a,
            "candidate_real_part": None if cand is None else str(cand),
        }


@dataclass(frozen=True)
class ZetaResult:
    """Reduced zeta function plus the pole bookkeeping derived from it."""

    n: int
    zeta: BiRationalFunction
    divisors: tuple[DivisorData, ...]
    candidate_poles: tuple[tuple[Fraction, tuple[Vec, ...]], ...]
    poles: tuple[tuple[Fraction, int], ...]  # (real part, order bound)

    def to_json(self):
        return {
            "n": self.n,
            "zeta": self.zeta.to_json(),
            "divisors": [d.to_json() for d in self.divisors],
            "candidate_poles": [
                {"real_part": str(rp), "rays": [list(r) for r in rays]}
                for rp, rays in self.candidate_poles
            ],
            "poles": [
                {"real_part": str(rp), "order_bound": ob} for rp, ob in self.poles
            ],
        }


def _divisors_of_fan(fan: Fan, ideal: MonomialIdeal):
    return tuple(
        DivisorData(r, sum(r) - 1, ideal.vanishing_order(r)) for r in fan.rays
    )


def _group_candidates(divisors):
    groups: dict[Fraction, list[Vec]] = {}
    for d in divisors:
        rp = d.candidate_real_part
        if rp is not None:
            groups.setdefault(rp, []).append(d.ray)
    return tuple(
        (rp, tuple(sorted(groups[rp]))) for rp in sorted(groups)
    )


def pole_report(zeta: BiRationalFunction, n: int):
    """Group denominator factors by pole real part -b/a.

    Factors with a = 0 contribute no pole in s.  The order bound is the
    multiplicity of the group, clamped at n since at most n exceptional
    divisors meet.
    """
    groups: dict[Fraction, int] = {}
    for f in zeta.denominator:
        if f.a > 0:
            rp = -f.ratio()
            groups[rp] = groups.get(rp, 0) + 1
    return tuple((rp, min(groups[rp], n)) for rp in sorted(groups))


def igusa_zeta(ideal: MonomialIdeal) -> ZetaResult:
    """Exact Igusa zeta function of the ideal, reduced, with pole data."""
    poly = newton_polyhedron(ideal)
    fan = normal_fan(poly)
    return _zeta_over_fan(ideal, fan)


def _zeta_over_fan(ideal: MonomialIdeal, fan: Fan) -> ZetaResult:
    n = ideal.n
    ones = (1,) * n

    closed = {}
    for cone in fan.cones:
        closed[frozenset(cone.rays)] = lattice_gf(cone, Grading(cone.vertex, ones))

    # Moebius coefficient of each face across all cones of the fan: the sum
    # of the per-cone interior generating functions expands into closed ones.
    index = {frozenset(c.rays): 0 for c in fan.cones}
    for i, j in fan.relation:
        face, cone = fan.cones[i], fan.cones[j]
        index[frozenset(face.rays)] += (-1) ** (cone.dim - face.dim)

    total = BiRationalFunction.zero()
    for cone in fan.cones:
        c = index[frozenset(cone.rays)]
        if c:
            total = total + closed[frozenset(cone.rays)] * c

    zeta = (total * BiPoly.binomial(0, 1) ** n).reduced()
    divisors = _divisors_of_fan(fan, ideal)
    return ZetaResult(
        n=n,
        zeta=zeta,
        divisors=divisors,
        candidate_poles=_group_candidates(divisors),
        poles=pole_report(zeta, n),
    )


def principal_zeta(exponent: Vec) -> BiRationalFunction:
    """Closed form for one monomial x^u: product over u_i > 0 of
    (1 - P) / (1 - T^{u_i} P)."""
    if any(u < 0 for u in exponent):
        raise ValueError("exponent vector must be nonnegative")
    if not any(exponent):
        raise ValueError("the unit monomial generates: ideal must be proper")
    num = BiPoly.one()
    den = []
    for u in exponent:
        if u > 0:
            num = num * BiPoly.binomial(0, 1)
            den.append(BinomialFactor(u, 1))
    return BiRationalFunction(num, den)


def divisor_data(ideal: MonomialIdeal) -> tuple[DivisorData, ...]:
    """Per-ray numerical data (k, a) of the fan of the ideal."""
    fan = normal_fan(newton_polyhedron(ideal))
    return _divisors_of_fan(fan, ideal)


def zeta_series(ideal: MonomialIdeal, bound: int) -> BiPoly:
    """Direct truncation of the defining sum, independent of the fan route.

    (1 - P)^n times the sum of T^{ord(a)} P^{|a|} over lattice points a with
    |a| <= bound, truncated to P-degree <= bound.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    n = ideal.n
    terms: dict[tuple[int, int], int] = {}

    def walk(i, remaining, point):
        if i == n:
            key = (ideal.vanishing_order(point), sum(point))
            terms[key] = terms.get(key, 0) + 1
            return
        for v in range(remaining + 1):
            walk(i + 1, remaining - v, point + (v,))

    walk(0, bound, ())
    raw = BiPoly(terms)
    return raw.mul_truncated(BiPoly.binomial(0, 1) ** n, bound)


def latex_zeta(rf: BiRationalFunction) -> str:
    """Render in the classical variables: T^t P^j prints as p^{-ts-j}."""

    def power(t, j):
        if t == 0 and j == 0:
            return "1"
        s_part = "" if t == 0 else ("-s" if t == 1 else f"-{t}s")
        j_part = "" if j == 0 else f"-{j}"
        return "p^{" + s_part + j_part + "}"

    def poly(poly_):
        parts = []
        for (t, j), c in poly_.terms():
            body = power(t, j)
            if body == "1":
                body = str(abs(c))
            elif abs(c) != 1:
                body = f"{abs(c)} {body}"
            parts.append(("-" if c < 0 else "+", body))
        if not parts:
            return "0"
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    num = poly(rf.numerator)
    if not rf.denominator:
        return num
    den = "".join(
        r"\left(1 - " + power(f.a, f.b) + r"\right)" for f in rf.denominator
    )
    return r"\frac{" + num + "}{" + den + "}"
