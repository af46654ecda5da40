"""Simplicial decomposition of a convex hull in regular position.

``decompose`` builds, for a finite duplicate-free integer point set B, a
sequence of simplices whose union is conv B, such that (a) the union is
exact, (b) no point of B ever lies in a simplex without being one of
its vertices, and (c) every simplex after the first shares a facet with
an earlier one.  The construction removes the lexicographically largest
point (always extremal) and recurses: if the remainder keeps its
dimension, the removed point is coned over the completely visible
boundary facets of the smaller decomposition; if the remainder drops a
dimension, it is coned over every simplex of the lower-dimensional
decomposition, built inside its own affine hull.

The ``verify_*`` operations certify those properties for any
decomposition, not just ones this module built: exact volume additivity
against the independent facet-enumeration oracle, pairwise regular
position via brute-force vertex enumeration of intersection polytopes,
and connectivity of the shared-facet graph.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from .geometry import (
    PointSet,
    affine_rank,
    conv_contains,
    intrinsic_integer_coords,
    solve_unique,
)
from .hull import cross_normal, hull_volume, int_det, simplex_volume

# Exact pairwise intersection enumeration is combinatorial in the
# dimension; above this the regular-position check falls back to a
# randomized rational-sampling probe (documented on the report).
_EXACT_INTERSECTION_DIM = 3


@dataclass(frozen=True)
class Simplex:
    """Vertex indices (into the ground set) of one simplex, sorted."""

    vertex_indices: tuple[int, ...]

    def __post_init__(self):
        idx = tuple(sorted(int(i) for i in self.vertex_indices))
        if len(set(idx)) != len(idx):
            raise ValueError("simplex has repeated vertex indices")
        object.__setattr__(self, "vertex_indices", idx)


@dataclass(frozen=True)
class Face:
    """A facet of one simplex: its vertex indices and the owning simplex."""

    vertex_indices: tuple[int, ...]
    owner: int


@dataclass(frozen=True)
class Decomposition:
    """An ordered list of simplices over a ground point set.

    ``adjacency`` holds index pairs (i < j) of simplices sharing a
    facet, i.e. sharing exactly dim-many vertices, where dim is the
    intrinsic dimension of the hull.  It is recomputed when omitted and
    validated when supplied.
    """

    ground: PointSet
    simplices: tuple[Simplex, ...]
    adjacency: tuple[tuple[int, int], ...] = None

    def __post_init__(self):
        if len(self.simplices) == 0:
            raise ValueError("decomposition needs at least one simplex")
        simps = tuple(s if isinstance(s, Simplex) else Simplex(tuple(s)) for s in self.simplices)
        object.__setattr__(self, "simplices", simps)
        n = len(self.ground)
        rank = affine_rank(self.ground.points)
        seen = set()
        for s in simps:
            if s.vertex_indices in seen:
                raise ValueError("decomposition lists a simplex twice")
            seen.add(s.vertex_indices)
            if any(i < 0 or i >= n for i in s.vertex_indices):
                raise ValueError("simplex vertex index out of range")
            if len(s.vertex_indices) != rank + 1:
                raise ValueError("simplex does not span the hull dimension")
            pts = [self.ground.points[i] for i in s.vertex_indices]
            if affine_rank(pts) != rank:
                raise ValueError(f"simplex {s.vertex_indices} is degenerate")
        computed = _facet_sharing_pairs(simps, rank)
        if self.adjacency is None:
            object.__setattr__(self, "adjacency", computed)
        else:
            given = tuple(sorted(tuple(sorted((int(a), int(b)))) for a, b in self.adjacency))
            if given != computed:
                raise ValueError("adjacency inconsistent with shared-vertex counts")
            object.__setattr__(self, "adjacency", given)

    @property
    def intrinsic_dim(self) -> int:
        return len(self.simplices[0].vertex_indices) - 1

    def simplex_points(self, i: int) -> PointSet:
        return PointSet(
            self.ground.dim,
            tuple(self.ground.points[j] for j in self.simplices[i].vertex_indices),
        )

    def to_json_dict(self) -> dict:
        return {
            "ground": [list(p) for p in self.ground.points],
            "simplices": [list(s.vertex_indices) for s in self.simplices],
            "adjacency": [list(pair) for pair in self.adjacency],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Decomposition":
        ground = PointSet.from_points(data["ground"])
        simplices = tuple(Simplex(tuple(s)) for s in data["simplices"])
        adjacency = tuple(tuple(p) for p in data.get("adjacency") or ()) or None
        return cls(ground, simplices, adjacency)


def _facet_sharing_pairs(simplices, rank) -> tuple[tuple[int, int], ...]:
    pairs = []
    for i, j in combinations(range(len(simplices)), 2):
        shared = set(simplices[i].vertex_indices) & set(simplices[j].vertex_indices)
        if len(shared) == rank:
            pairs.append((i, j))
    return tuple(pairs)


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _sign(x) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def _boundary_faces(simplices: list[tuple[int, ...]], coords) -> list[tuple]:
    """Facets incident to exactly one simplex, with oriented hyperplanes.

    Yields (face, owner, normal, offset, inner_sign) in deterministic
    order; inner_sign is the side of the owning simplex's remaining
    vertex, never zero.
    """
    counts: dict[tuple[int, ...], int] = {}
    for s in simplices:
        for j in range(len(s)):
            face = s[:j] + s[j + 1:]
            counts[face] = counts.get(face, 0) + 1
    out = []
    for owner, s in enumerate(simplices):
        for j in range(len(s)):
            face = s[:j] + s[j + 1:]
            if counts[face] != 1:
                continue
            normal = cross_normal([coords[i] for i in face])
            offset = _dot(normal, coords[face[0]])
            inner = _sign(_dot(normal, coords[s[j]]) - offset)
            out.append((face, owner, normal, offset, inner))
    return out


def _visible_cone_faces(simplices, coords, apex) -> list[tuple[tuple[int, ...], int]]:
    """Boundary facets strictly separated from the apex.

    A facet whose hyperplane contains the apex is not visible: points of
    such a facet see the apex along a segment that stays inside the
    hull, so no cone is added over them.
    """
    faces = []
    for face, owner, normal, offset, inner in _boundary_faces(simplices, coords):
        s_apex = _sign(_dot(normal, apex) - offset)
        if s_apex != 0 and s_apex == -inner:
            faces.append((face, owner))
    return faces


def _decompose_rec(idxs, coords, rank, original_points) -> list[tuple[int, ...]]:
    if len(idxs) == rank + 1:
        return [tuple(sorted(idxs))]
    # The lexicographically largest point is always extremal, so removing
    # it keeps the rest's hull strictly smaller.
    b = max(idxs, key=lambda i: original_points[i])
    rest = [i for i in idxs if i != b]
    rest_rank = affine_rank([coords[i] for i in rest])
    if rest_rank == rank:
        sub = _decompose_rec(idxs=rest, coords=coords, rank=rank, original_points=original_points)
        cones = [
            tuple(sorted(face + (b,)))
            for face, _ in _visible_cone_faces(sub, coords, coords[b])
        ]
        return sub + cones
    # The remainder lost a dimension: rebuild inside its own affine hull
    # and cone every lower-dimensional simplex with the removed point.
    sub_coords, sub_rank, _ = intrinsic_integer_coords([coords[i] for i in rest])
    new_coords = {g: sub_coords[j] for j, g in enumerate(rest)}
    sub = _decompose_rec(idxs=rest, coords=new_coords, rank=sub_rank, original_points=original_points)
    return [tuple(sorted(s + (b,))) for s in sub]


def decompose(B: PointSet) -> Decomposition:
    """Simplicial decomposition of conv B in regular position.

    Deterministic: identical input point order yields an identical
    decomposition.  Works inside the intrinsic affine hull when B does
    not span its ambient space.
    """
    if len(B) < 2:
        raise ValueError("decomposition needs at least 2 points")
    coords_list, rank, _ = intrinsic_integer_coords(B.points)
    coords = dict(enumerate(coords_list))
    tuples = _decompose_rec(list(range(len(B))), coords, rank, B.points)
    return Decomposition(B, tuple(Simplex(t) for t in tuples))


def visible_boundary_faces(D: Decomposition, b) -> list[Face]:
    """Boundary facets of the decomposition completely visible from b.

    b must lie strictly outside conv(ground).  Visibility is decided
    facet-wise by strict hyperplane separation from the incident
    simplex; when b is off the hull's affine span entirely, every
    boundary facet is completely visible.
    """
    b = tuple(b)
    if len(b) != D.ground.dim:
        raise ValueError("apex has wrong dimension")
    if conv_contains(D.ground, b):
        raise ValueError("apex not exterior")
    coords_list, _, to_intrinsic = intrinsic_integer_coords(D.ground.points)
    coords = dict(enumerate(coords_list))
    simplices = [s.vertex_indices for s in D.simplices]
    apex = to_intrinsic(b)
    if apex is None:
        return [Face(face, owner) for face, owner, *_ in _boundary_faces(simplices, coords)]
    return [Face(face, owner) for face, owner in _visible_cone_faces(simplices, coords, apex)]


def _simplex_facet_system(simplex, coords):
    """Inequalities <normal, x> <= offset describing one simplex."""
    rows = []
    verts = simplex
    for j in range(len(verts)):
        face = verts[:j] + verts[j + 1:]
        normal = cross_normal([coords[i] for i in face])
        offset = _dot(normal, coords[face[0]])
        if _dot(normal, coords[verts[j]]) - offset > 0:
            normal = tuple(-v for v in normal)
            offset = -offset
        rows.append((normal, offset))
    return rows


def _intersection_vertices(sys1, sys2, rank):
    """Vertices of the polytope cut out by two simplex facet systems.

    Brute force: every rank-subset of the combined hyperplanes with a
    nonsingular coefficient matrix is solved by Cramer's rule in integer
    arithmetic and kept when it satisfies all constraints.  Returns
    deduplicated (numerators, denominator>0) pairs, sorted.
    """
    constraints = sys1 + sys2
    found = set()
    for subset in combinations(range(len(constraints)), rank):
        mat = [list(constraints[i][0]) for i in subset]
        den = int_det(mat)
        if den == 0:
            continue
        nums = []
        for col in range(rank):
            repl = [
                [constraints[i][1] if c == col else constraints[i][0][c] for c in range(rank)]
                for i in subset
            ]
            nums.append(int_det(repl))
        if den < 0:
            den = -den
            nums = [-v for v in nums]
        if all(_dot(n, nums) <= c * den for n, c in constraints):
            g = den
            for v in nums:
                g = gcd(g, abs(v))
            found.add((tuple(v // g for v in nums), den // g))
    return sorted(found)


def _in_hull_of_independent(points, q) -> bool:
    """Membership of a rational point in the hull of affinely independent points."""
    rows = [[p[c] for p in points] for c in range(len(q))]
    rows.append([1] * len(points))
    sol = solve_unique(rows, list(q) + [1])
    return sol is not None and all(c >= 0 for c in sol)


@dataclass(frozen=True)
class RegularPositionReport:
    passed: bool
    offending_pair: tuple[int, int] | None = None
    witness: tuple | None = None
    mode: str = "exact"

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "offending_pair": list(self.offending_pair) if self.offending_pair else None,
            "witness": [str(c) for c in self.witness] if self.witness else None,
            "mode": self.mode,
        }


def verify_regular_position(D: Decomposition) -> RegularPositionReport:
    """Check that every pair of simplices meets in a common face.

    For each pair, every vertex of the intersection polytope (exact
    enumeration over the combined facet systems) must lie in the hull of
    the shared ground vertices.  Above dimension 3 the enumeration is
    replaced by a randomized rational-sampling probe, reported as
    mode="sampled"; that probe can miss violations.
    """
    coords_list, rank, _ = intrinsic_integer_coords(D.ground.points)
    coords = dict(enumerate(coords_list))
    simplices = [s.vertex_indices for s in D.simplices]
    if rank > _EXACT_INTERSECTION_DIM:
        return _sampled_regular_position(D, coords, rank)

    systems = [_simplex_facet_system(s, coords) for s in simplices]
    boxes = [_bounding_box([coords[i] for i in s]) for s in simplices]
    for i, j in combinations(range(len(simplices)), 2):
        if _boxes_disjoint(boxes[i], boxes[j]):
            continue
        verts = _intersection_vertices(systems[i], systems[j], rank)
        shared = sorted(set(simplices[i]) & set(simplices[j]))
        if not shared:
            if verts:
                nums, den = verts[0]
                witness = tuple(Fraction(v, den) for v in nums)
                return RegularPositionReport(False, (i, j), witness)
            continue
        shared_pts = [coords[s] for s in shared]
        for nums, den in verts:
            q = tuple(Fraction(v, den) for v in nums)
            if not _in_hull_of_independent(shared_pts, q):
                return RegularPositionReport(False, (i, j), q)
    return RegularPositionReport(True)


def _sampled_regular_position(D, coords, rank) -> RegularPositionReport:
    rng = random.Random("regular-position-probe")
    simplices = [s.vertex_indices for s in D.simplices]
    systems = [_simplex_facet_system(s, coords) for s in simplices]
    for i, j in combinations(range(len(simplices)), 2):
        shared = sorted(set(simplices[i]) & set(simplices[j]))
        shared_pts = [coords[s] for s in shared]
        for src, other in ((i, j), (j, i)):
            verts = [coords[v] for v in simplices[src]]
            for _ in range(64):
                weights = [Fraction(rng.randrange(0, 17), 1) for _ in verts]
                total = sum(weights)
                if total == 0:
                    continue
                q = tuple(
                    sum(w * v[c] for w, v in zip(weights, verts)) / total
                    for c in range(rank)
                )
                inside = all(
                    _dot(n, q) <= c for n, c in systems[other]
                )
                if not inside:
                    continue
                if not shared:
                    return RegularPositionReport(False, (i, j), q, mode="sampled")
                if not _in_hull_of_independent(shared_pts, q):
                    return RegularPositionReport(False, (i, j), q, mode="sampled")
    return RegularPositionReport(True, mode="sampled")


def _bounding_box(points):
    return (
        tuple(min(p[c] for p in points) for c in range(len(points[0]))),
        tuple(max(p[c] for p in points) for c in range(len(points[0]))),
    )


def _boxes_disjoint(box1, box2) -> bool:
    (lo1, hi1), (lo2, hi2) = box1, box2
    return any(h1 < l2 or h2 < l1 for l1, h1, l2, h2 in zip(lo1, hi1, lo2, hi2))


@dataclass(frozen=True)
class CoverReport:
    passed: bool
    total_simplex_volume: Fraction
    hull_volume: Fraction
    overlapping_pair: tuple[int, int] | None = None

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "total_simplex_volume": str(self.total_simplex_volume),
            "hull_volume": str(self.hull_volume),
            "overlapping_pair": list(self.overlapping_pair) if self.overlapping_pair else None,
        }


def verify_cover(D: Decomposition) -> CoverReport:
    """Certify that the simplices tile conv(ground) exactly.

    Volumes are computed in a common integer coordinate system of the
    hull's affine span: the sum of simplex volumes must equal the hull
    volume from the independent facet-enumeration oracle, and every
    pairwise intersection must have zero volume (its vertex set must not
    span the full dimension).
    """
    coords_list, rank, _ = intrinsic_integer_coords(D.ground.points)
    coords = dict(enumerate(coords_list))
    simplices = [s.vertex_indices for s in D.simplices]
    total = Fraction(0)
    for s in simplices:
        total += simplex_volume([coords[i] for i in s])
    hull_vol = hull_volume(coords_list)
    overlapping = None
    systems = [_simplex_facet_system(s, coords) for s in simplices]
    boxes = [_bounding_box([coords[i] for i in s]) for s in simplices]
    for i, j in combinations(range(len(simplices)), 2):
        if _boxes_disjoint(boxes[i], boxes[j]):
            continue
        verts = _intersection_vertices(systems[i], systems[j], rank)
        if len(verts) <= rank:
            continue
        pts = [tuple(Fraction(v, den) for v in nums) for nums, den in verts]
        if affine_rank(pts) == rank:
            overlapping = (i, j)
            break
    passed = total == hull_vol and overlapping is None
    return CoverReport(passed, total, hull_vol, overlapping)


@dataclass(frozen=True)
class AdjacencyReport:
    passed: bool
    connected: bool
    order_ok: bool
    suggested_order: tuple[int, ...] | None = None

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "connected": self.connected,
            "order_ok": self.order_ok,
            "suggested_order": list(self.suggested_order) if self.suggested_order else None,
        }


def verify_adjacency_chain(D: Decomposition) -> AdjacencyReport:
    """Check the shared-facet graph is connected and the order is chained.

    The stored order is chained when every simplex after the first
    shares a facet with some earlier one.  If the graph is connected but
    the order is wrong, a breadth-first order witnessing chainability is
    returned.
    """
    n = len(D.simplices)
    neighbors: dict[int, list[int]] = {i: [] for i in range(n)}
    for i, j in D.adjacency:
        neighbors[i].append(j)
        neighbors[j].append(i)
    for i in neighbors:
        neighbors[i].sort()

    seen = {0}
    queue = [0]
    bfs_order = [0]
    while queue:
        cur = queue.pop(0)
        for nb in neighbors[cur]:
            if nb not in seen:
                seen.add(nb)
                queue.append(nb)
                bfs_order.append(nb)
    connected = len(seen) == n
    order_ok = all(any(j < i for j in neighbors[i]) for i in range(1, n))
    suggested = None
    if connected and not order_ok:
        suggested = tuple(bfs_order)
    return AdjacencyReport(connected and order_ok, connected, order_ok, suggested)
