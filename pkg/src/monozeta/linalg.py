"""Exact linear algebra over the rationals and over integer lattices.

Everything here works on tuples/lists of Python ints or Fractions; no floats
are ever introduced.  Matrices are sequences of rows.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Vec = tuple[int, ...]


def dot(u, v):
    return sum(a * b for a, b in zip(u, v, strict=True))


def vec_gcd(v) -> int:
    g = 0
    for a in v:
        g = gcd(g, a)
    return g


def primitive(v) -> Vec:
    """Shortest integer vector on the ray through v (v must be nonzero)."""
    g = vec_gcd(v)
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return tuple(a // g for a in v)


def scale_to_int(v) -> Vec:
    """Clear denominators of a rational vector and make it primitive."""
    mult = 1
    for a in v:
        d = Fraction(a).denominator
        mult = mult * d // gcd(mult, d)
    w = tuple(int(a * mult) for a in v)
    return primitive(w)


def _echelon(rows):
    """Row echelon form over Fraction.  Returns (rows, pivot_columns)."""
    m = [[Fraction(a) for a in row] for row in rows]
    pivots = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = 1 / m[r][c]
        m[r] = [a * inv for a in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows) -> int:
    if not rows:
        return 0
    return len(_echelon(rows)[1])


def det(rows) -> Fraction:
    n = len(rows)
    m = [[Fraction(a) for a in row] for row in rows]
    sign = 1
    d = Fraction(1)
    for c in range(n):
        pr = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pr is None:
            return Fraction(0)
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            sign = -sign
        d *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return d * sign


def det_int(rows) -> int:
    d = det(rows)
    if d.denominator != 1:
        raise ValueError("matrix is not integral")
    return d.numerator


def invert(rows):
    """Inverse of a nonsingular square matrix, as rows of Fractions."""
    n = len(rows)
    m = [[Fraction(a) for a in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(rows)]
    red, pivots = _echelon(m)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def solve(rows, rhs):
    """One exact solution x of (rows) x = rhs, or None if inconsistent.

    The system may be under- or over-determined; free variables are set
    to zero, which keeps the choice deterministic.
    """
    if not rows:
        return ()
    ncols = len(rows[0])
    aug = [list(row) + [b] for row, b in zip(rows, rhs, strict=True)]
    red, pivots = _echelon(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        # reduced echelon form: pivot row i reads x_c + (free terms) = rhs,
        # and the free variables are pinned to zero
        x[c] = red[i][ncols]
    for row, b in zip(rows, rhs):
        if dot(row, x) != b:
            return None
    return tuple(x)


def row_hnf(mat, transform=False):
    """Row Hermite normal form of an integer matrix.

    Returns H (list of row lists, zero rows at the bottom) and, when
    transform is set, a unimodular U with U*mat == H.
    """
    h = [list(row) for row in mat]
    nrows = len(h)
    ncols = len(h[0]) if nrows else 0
    u = [[int(i == j) for j in range(nrows)] for i in range(nrows)] if transform else None

    def swap(i, j):
        h[i], h[j] = h[j], h[i]
        if u:
            u[i], u[j] = u[j], u[i]

    def addmul(i, j, q):
        # row_i -= q * row_j
        h[i] = [a - q * b for a, b in zip(h[i], h[j])]
        if u:
            u[i] = [a - q * b for a, b in zip(u[i], u[j])]

    def negate(i):
        h[i] = [-a for a in h[i]]
        if u:
            u[i] = [-a for a in u[i]]

    pr = 0
    for col in range(ncols):
        while True:
            live = [i for i in range(pr, nrows) if h[i][col] != 0]
            if not live:
                break
            best = min(live, key=lambda i: (abs(h[i][col]), i))
            swap(pr, best)
            done = True
            for i in range(pr + 1, nrows):
                if h[i][col] != 0:
                    addmul(i, pr, h[i][col] // h[pr][col])
                    if h[i][col] != 0:
                        done = False
            if done:
                break
        if pr < nrows and h[pr][col] != 0:
            if h[pr][col] < 0:
                negate(pr)
            for i in range(pr):
                q = h[i][col] // h[pr][col]
                if q:
                    addmul(i, pr, q)
            pr += 1
            if pr == nrows:
                break
    return (h, u) if transform else h


def left_kernel_basis(mat, nrows=None):
    """Basis of the lattice {u in Z^k : u * mat == 0} for an integer matrix.

    mat is given as k rows; pass nrows explicitly when mat has no rows to
    disambiguate the ambient rank.
    """
    k = len(mat) if nrows is None else nrows
    if k == 0:
        return []
    if not mat or not mat[0]:
        return [tuple(int(i == j) for j in range(k)) for i in range(k)]
    h, u = row_hnf(mat, transform=True)
    return [tuple(u[i]) for i in range(k) if all(a == 0 for a in h[i])]


def saturation_basis(vectors, n):
    """Basis (rows) of span_Q(vectors) ∩ Z^n, the saturated sublattice.

    Returns r rows for a rank-r span; the empty list when all vectors vanish.
    """
    vecs = [v for v in vectors if any(v)]
    if not vecs:
        return []
    # covectors vanishing on the span
    perp = left_kernel_basis([tuple(v[i] for v in vecs) for i in range(n)], nrows=n)
    if not perp:
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    # vectors orthogonal to every such covector
    back = left_kernel_basis([tuple(p[i] for p in perp) for i in range(n)], nrows=n)
    return [tuple(row) for row in back]
