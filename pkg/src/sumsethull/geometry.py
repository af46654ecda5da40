"""Exact rational affine geometry over integer lattice points.

All predicates are decided with arbitrary-precision integer and rational
arithmetic: there is no floating point and no epsilon anywhere.  Input
points carry integer coordinates; internal coefficients (barycentric
weights, hyperplane normals) are exact ``fractions.Fraction`` values, so
every sign test and membership query has a single correct answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .exactlp import feasible_nonneg

Coords = tuple  # coordinate tuple of int or Fraction entries


@dataclass(frozen=True)
class PointSet:
    """An ordered, duplicate-free set of integer points in Z^dim.

    Points are plain tuples of Python ints, so equality and hashing are
    by exact coordinate values.  The set may be empty (useful for
    partition cells); operations that need points enforce nonemptiness
    themselves.
    """

    dim: int
    points: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be >= 1")
        pts = tuple(tuple(int(c) for c in p) for p in self.points)
        for p in pts:
            if len(p) != self.dim:
                raise ValueError(
                    f"point {p} has {len(p)} coordinates, expected {self.dim}"
                )
        seen = set()
        for p in pts:
            if p in seen:
                raise ValueError(f"duplicate point {p}")
            seen.add(p)
        object.__setattr__(self, "points", pts)

    @classmethod
    def from_points(cls, points: Iterable[Sequence[int]], dim: int | None = None) -> "PointSet":
        """Build a PointSet from an iterable of coordinate sequences.

        The dimension is inferred from the first point unless given
        explicitly (required for an empty set).
        """
        pts = [tuple(int(c) for c in p) for p in points]
        if dim is None:
            if not pts:
                raise ValueError("cannot infer dimension of an empty point set")
            dim = len(pts[0])
        return cls(dim, tuple(pts))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p) -> bool:
        return tuple(p) in set(self.points)

    def translate(self, t: Sequence[int]) -> "PointSet":
        if len(t) != self.dim:
            raise ValueError("translation vector has wrong dimension")
        return PointSet(self.dim, tuple(tuple(c + s for c, s in zip(p, t)) for p in self.points))


@dataclass(frozen=True)
class BarycentricCoords:
    """Exact convex coefficients of a point with respect to simplex vertices.

    ``coeffs[i]`` is the weight of the vertex at position ``basis[i]``;
    all weights are >= 0 and sum to exactly 1.
    """

    coeffs: tuple[Fraction, ...]
    basis: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != len(self.basis):
            raise ValueError("coefficients and basis differ in length")
        if any(c < 0 for c in self.coeffs):
            raise ValueError("barycentric coefficients must be nonnegative")
        if sum(self.coeffs, Fraction(0)) != 1:
            raise ValueError("barycentric coefficients must sum to 1")


@dataclass(frozen=True)
class Hyperplane:
    """The set {x : <normal, x> = offset}, with exact rational data."""

    normal: tuple
    offset: Fraction | int

    def __post_init__(self):
        if all(c == 0 for c in self.normal):
            raise ValueError("hyperplane normal must be nonzero")


def _echelon(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """In-place forward elimination; returns (rows, pivot column indices)."""
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][c]
        rows[r] = [v / pv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def linear_rank(vectors: Sequence[Sequence]) -> int:
    """Rank of a family of rational vectors, by exact Gaussian elimination."""
    rows = [[Fraction(v) for v in vec] for vec in vectors]
    _, pivots = _echelon(rows)
    return len(pivots)


def affine_rank(points: Sequence[Sequence]) -> int:
    """Dimension of the affine hull of the given coordinate tuples."""
    if not points:
        raise ValueError("empty point set")
    p0 = points[0]
    diffs = [[Fraction(a) - Fraction(b) for a, b in zip(p, p0)] for p in points[1:]]
    return linear_rank(diffs)


def solve_unique(rows: Sequence[Sequence], rhs: Sequence) -> tuple[Fraction, ...] | None:
    """Solve a linear system expected to have full column rank.

    Returns the unique solution, or None when the system is
    inconsistent.  Raises ValueError if the coefficient matrix does not
    have full column rank (the solution would not be unique).
    """
    ncols = len(rows[0]) if rows else 0
    aug = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    aug, pivots = _echelon(aug)
    if ncols in pivots:
        return None  # pivot in the rhs column: inconsistent
    if len(pivots) < ncols:
        raise ValueError("underdetermined system")
    sol = [Fraction(0)] * ncols
    for r, c in enumerate(pivots):
        sol[c] = aug[r][-1]
    return tuple(sol)


def _check_point(dim: int, q: Sequence) -> tuple:
    q = tuple(q)
    if len(q) != dim:
        raise ValueError(f"point {q} has {len(q)} coordinates, expected {dim}")
    return q


def affine_dimension(P: PointSet) -> int:
    """Dimension of the affine hull of P.

    P is proper d-dimensional (not contained in any affine hyperplane of
    its ambient space) exactly when this equals ``P.dim``.
    """
    if len(P) == 0:
        raise ValueError("empty point set")
    return affine_rank(P.points)


def is_proper(P: PointSet) -> bool:
    """True iff P spans its full ambient dimension."""
    return affine_dimension(P) == P.dim


def conv_contains(P: PointSet, q: Sequence) -> bool:
    """Exact test whether q lies in the convex hull of P.

    Decided as rational feasibility of the convex-combination system
    (weights >= 0, summing to 1, reproducing q) via a phase-1 simplex
    method with Bland's anti-cycling rule, so the answer never depends
    on a tolerance.
    """
    if len(P) == 0:
        raise ValueError("empty point set")
    q = _check_point(P.dim, q)
    rows = [[p[c] for p in P.points] for c in range(P.dim)]
    rows.append([1] * len(P))
    rhs = list(q) + [1]
    return feasible_nonneg(rows, rhs)


def vertex_set(P: PointSet) -> PointSet:
    """The extremal points of P, in the order they appear in P.

    A point is a vertex when it is not in the convex hull of the other
    points of P.
    """
    if len(P) == 0:
        raise ValueError("empty point set")
    if len(P) == 1:
        return P
    kept = []
    for i, p in enumerate(P.points):
        others = PointSet(P.dim, P.points[:i] + P.points[i + 1:])
        if not conv_contains(others, p):
            kept.append(p)
    return PointSet(P.dim, tuple(kept))


def barycentric(S: PointSet, q: Sequence) -> BarycentricCoords | None:
    """Exact barycentric coordinates of q with respect to simplex vertices S.

    S must be affinely independent (a simplex vertex set, possibly of
    lower dimension than the ambient space).  Returns None when q lies
    outside conv S, either off the affine hull or with some negative
    weight; otherwise the unique exact rational coefficients.
    """
    if len(S) == 0:
        raise ValueError("empty point set")
    q = _check_point(S.dim, q)
    n = len(S)
    if affine_rank(S.points) != n - 1:
        raise ValueError("degenerate simplex")
    rows = [[p[c] for p in S.points] for c in range(S.dim)]
    rows.append([1] * n)
    sol = solve_unique(rows, list(q) + [1])
    if sol is None:
        return None
    if any(c < 0 for c in sol):
        return None
    return BarycentricCoords(tuple(sol), tuple(range(n)))


def side_of(H: Hyperplane, q: Sequence) -> int:
    """Exact sign of <normal, q> - offset: -1, 0, or +1."""
    q = _check_point(len(H.normal), q)
    s = sum((n * c for n, c in zip(H.normal, q)), Fraction(0)) - H.offset
    if s > 0:
        return 1
    if s < 0:
        return -1
    return 0


def intrinsic_integer_coords(points: Sequence[Sequence]):
    """Affine map of points onto an integer grid of their affine hull.

    Returns ``(coords, rank, to_intrinsic)``: ``coords[i]`` is the image
    of ``points[i]`` as an integer tuple in rank-dimensional space, and
    ``to_intrinsic`` maps any further point to the same grid (Fraction
    entries are possible there) or returns None off the affine span.
    The map is injective and affine, so convexity, incidence and ratios
    of volumes are preserved; when the points already span their space
    it is the identity.
    """
    if not points:
        raise ValueError("empty point set")
    dim = len(points[0])
    p0 = tuple(Fraction(c) for c in points[0])

    basis: list[list[Fraction]] = []    # independent difference vectors
    echelon: list[list[Fraction]] = []  # reduced copies, for rank growth
    for p in points[1:]:
        v = [Fraction(a) - b for a, b in zip(p, p0)]
        w = v[:]
        for row in echelon:
            lead = next(i for i, x in enumerate(row) if x != 0)
            if w[lead] != 0:
                f = w[lead] / row[lead]
                w = [a - f * b for a, b in zip(w, row)]
        if any(x != 0 for x in w):
            basis.append(v)
            echelon.append(w)
    rank = len(basis)

    if rank == dim:
        coords = [tuple(int(c) for c in p) for p in points]

        def to_intrinsic(q):
            return tuple(Fraction(c) for c in q)

        return coords, rank, to_intrinsic

    rows = [[basis[j][c] for j in range(rank)] for c in range(dim)]

    def gamma(q):
        rhs = [Fraction(a) - b for a, b in zip(q, p0)]
        return solve_unique(rows, rhs)

    gammas = [gamma(p) for p in points]
    scale = 1
    for g in gammas:
        for c in g:
            scale = scale * c.denominator // gcd(scale, c.denominator)

    coords = [tuple(int(c * scale) for c in g) for g in gammas]

    def to_intrinsic(q):
        g = gamma(q)
        if g is None:
            return None
        return tuple(c * scale for c in g)

    return coords, rank, to_intrinsic
