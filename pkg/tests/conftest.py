"""Shared hypothesis strategies for small exact-geometry instances."""

from hypothesis import assume, strategies as st

from sumsethull.geometry import PointSet, affine_rank
from sumsethull.hull import lattice_points


def lattice_point(dim, coord=4):
    return st.tuples(*[st.integers(-coord, coord)] * dim)


@st.composite
def point_sets(draw, dim=None, min_size=1, max_size=6, coord=4):
    d = dim if dim is not None else draw(st.integers(1, 3))
    pts = draw(
        st.lists(lattice_point(d, coord), min_size=min_size, max_size=max_size, unique=True)
    )
    return PointSet(d, tuple(pts))


@st.composite
def proper_point_sets(draw, dim=None, max_size=7, coord=3):
    d = dim if dim is not None else draw(st.integers(1, 3))
    P = draw(point_sets(dim=d, min_size=d + 1, max_size=max_size, coord=coord))
    assume(affine_rank(P.points) == d)
    return P


@st.composite
def simplices(draw, dim=None, coord=4):
    d = dim if dim is not None else draw(st.integers(1, 3))
    return draw(proper_point_sets(dim=d, max_size=d + 1, coord=coord))


@st.composite
def contained_pairs(draw, dim=None, max_b=6, max_a=5, coord=3):
    """(A, B) with B proper and A drawn from the lattice points of conv B."""
    B = draw(proper_point_sets(dim=dim, max_size=max_b, coord=coord))
    grid = lattice_points(B)
    size = draw(st.integers(1, min(max_a, len(grid))))
    idx = draw(st.lists(st.integers(0, len(grid) - 1), min_size=size, max_size=size, unique=True))
    A = PointSet(B.dim, tuple(sorted(grid[i] for i in idx)))
    return A, B
