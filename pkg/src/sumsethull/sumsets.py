"""Brute-force exact enumeration of sumsets on the integer lattice.

Every cardinality claim in this package is checked against these
enumerations, so they favour obvious correctness: sums of coordinate
tuples, deduplicated by exact value, returned in sorted order for
byte-stable serialization.  The k-fold sum iterates multisets
(combinations with repetition) rather than k-tuples, which cuts the
work from |B|^k to C(|B|+k-1, k).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from .geometry import PointSet


@dataclass(frozen=True)
class SumsetResult:
    """A computed sumset with its provenance.

    ``points`` holds the deduplicated sums sorted lexicographically;
    ``provenance`` records the operands and the repetition count used.
    """

    points: PointSet
    provenance: dict = field(compare=False)

    @property
    def cardinality(self) -> int:
        return len(self.points)


def _require_same_dim(X: PointSet, Y: PointSet) -> None:
    if X.dim != Y.dim:
        raise ValueError(f"dimension mismatch: {X.dim} vs {Y.dim}")


def sumset(X: PointSet, Y: PointSet) -> SumsetResult:
    """The exact sumset {x + y : x in X, y in Y}."""
    if len(X) == 0 or len(Y) == 0:
        raise ValueError("sumset operands must be nonempty")
    _require_same_dim(X, Y)
    sums = {tuple(a + b for a, b in zip(x, y)) for x in X.points for y in Y.points}
    pts = PointSet(X.dim, tuple(sorted(sums)))
    return SumsetResult(pts, {"op": "sumset", "left": X, "right": Y})


def k_fold(B: PointSet, k: int) -> SumsetResult:
    """The k-fold sumset B + ... + B (k copies), enumerated over multisets."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if len(B) == 0:
        raise ValueError("k-fold sum of an empty set")
    sums = set()
    for combo in combinations_with_replacement(B.points, k):
        sums.add(tuple(sum(cs) for cs in zip(*combo)))
    pts = PointSet(B.dim, tuple(sorted(sums)))
    return SumsetResult(pts, {"op": "k_fold", "base": B, "k": k})


def multiset_sum_count(B: PointSet, k: int) -> int:
    """Number of size-k multisets of B, i.e. C(|B|+k-1, k).

    Equals |kB| exactly when every element of kB has a unique multiset
    representation (affinely independent B); the gap between the two
    counts how many collisions repeated addition produced.
    """
    from math import comb

    return comb(len(B) + k - 1, k)


def a_plus_kb(A: PointSet, B: PointSet, k: int) -> SumsetResult:
    """The sumset A + kB, with provenance recording all three operands."""
    _require_same_dim(A, B)
    kb = k_fold(B, k)
    res = sumset(A, kb.points)
    return SumsetResult(res.points, {"op": "a_plus_kb", "a": A, "b": B, "k": k})
