"""Closed-form cardinality bounds and theorem-level verification.

The formulas are exact integer expressions in the set size m, the
dimension d, the repetition count k and (for the simplex case) the
overlap m1 = |A intersect B|.  ``verify_theorem`` ties each formula to
the brute-force enumeration engine: it checks the stated hypotheses,
computes the actual sumset cardinality, and reports both numbers plus a
satisfied flag.  Bounds may legitimately be negative for small m; a
negative bound is vacuous but still compared as-is.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .geometry import PointSet, affine_dimension, conv_contains, vertex_set
from .sumsets import a_plus_kb, sumset

THEOREM_TAGS = ("freiman", "vertex_sum", "two_sets", "k_fold", "simplex_exact")


class HypothesisError(ValueError):
    """A verification request whose instance violates a stated hypothesis."""


def binom(n: int, r: int) -> int:
    """Exact C(n, r); zero when r > n, one when r = 0."""
    if n < 0 or r < 0:
        raise ValueError("binomial arguments must be nonnegative")
    return comb(n, r)


def freiman_bound(m: int, d: int) -> int:
    """Lower bound m(d+1) - d(d+1)/2 for |A+A| over proper d-dimensional A."""
    if m < 1 or d < 1:
        raise ValueError("m and d must be >= 1")
    return m * (d + 1) - d * (d + 1) // 2


def kfold_bound(m: int, d: int, k: int) -> int:
    """Lower bound m*C(d+k,k) - k*C(d+k,k+1) for |A+kB|.

    Equals (m - kd/(k+1)) * C(d+k,k) as an exact rational; reduces to
    the Freiman bound at k = 1.  May be negative for small m.
    """
    if m < 1 or d < 1 or k < 1:
        raise ValueError("m, d and k must be >= 1")
    return m * binom(d + k, k) - k * binom(d + k, k + 1)


def simplex_exact_count(m: int, m1: int, d: int, k: int) -> int:
    """Exact |A+kB| when B is a d-simplex vertex set, A inside conv B.

    Here m = |A| and m1 = |A intersect B|.  The count splits into the
    m - m1 points off B, each contributing a disjoint translate of kB,
    plus the union of translates by the shared vertices, counted by an
    inclusion argument on multiset exponent vectors.
    """
    if m < 1 or d < 1 or k < 1:
        raise ValueError("m, d and k must be >= 1")
    if m1 < 0 or m1 > d + 1:
        raise ValueError("m1 must lie in [0, d+1]")
    if m1 > m:
        raise ValueError("m1 cannot exceed m")
    return (m - m1) * binom(d + k, k) + binom(d + k + 1, k + 1) - binom(d - m1 + k + 1, k + 1)


@dataclass(frozen=True)
class VerificationRecord:
    """Outcome of checking one bound against one concrete instance."""

    instance: str
    theorem: str
    bound: int
    actual: int
    satisfied: bool
    witness: dict

    def to_dict(self) -> dict:
        w = {}
        for key, value in self.witness.items():
            if isinstance(value, PointSet):
                w[key] = [list(p) for p in value.points]
            else:
                w[key] = value
        return {
            "instance": self.instance,
            "theorem": self.theorem,
            "bound": self.bound,
            "actual": self.actual,
            "satisfied": self.satisfied,
            "witness": w,
        }


def _require_proper(S: PointSet, name: str) -> None:
    if affine_dimension(S) != S.dim:
        raise HypothesisError(f"{name} not proper d-dimensional")


def _require_inside_hull(A: PointSet, B: PointSet) -> None:
    for a in A.points:
        if not conv_contains(B, a):
            raise HypothesisError("A is not contained in conv B")


def verify_theorem(
    tag: str,
    A: PointSet,
    B: PointSet | None = None,
    k: int = 1,
    instance: str = "adhoc",
) -> VerificationRecord:
    """Check one of the named cardinality bounds on a concrete instance.

    Tags: ``freiman`` (|A+A|, no B), ``vertex_sum`` (|A + vert A|, no B),
    ``two_sets`` (|A+B|, k = 1), ``k_fold`` (|A+kB|), ``simplex_exact``
    (|A+kB| with B a simplex vertex set; equality required).  Hypothesis
    violations raise HypothesisError naming the failed assumption.
    """
    if tag not in THEOREM_TAGS:
        raise ValueError(f"unknown theorem tag {tag!r}")
    if len(A) == 0:
        raise HypothesisError("A is empty")
    m = len(A)
    d = A.dim
    witness: dict = {"a": A, "k": k, "m": m, "d": d}

    if tag in ("freiman", "vertex_sum"):
        if B is not None:
            raise ValueError(f"theorem {tag!r} takes no second set")
        _require_proper(A, "A")
        if tag == "freiman":
            actual = sumset(A, A).cardinality
        else:
            av = vertex_set(A)
            witness["a_vertices"] = av
            actual = sumset(A, av).cardinality
        bound = freiman_bound(m, d)
        return VerificationRecord(instance, tag, bound, actual, actual >= bound, witness)

    if B is None:
        raise HypothesisError(f"theorem {tag!r} requires a second set B")
    if B.dim != d:
        raise HypothesisError("A and B have different dimensions")
    if len(B) == 0:
        raise HypothesisError("B is empty")
    witness["b"] = B
    _require_proper(B, "B")
    _require_inside_hull(A, B)

    if tag == "two_sets":
        if k != 1:
            raise ValueError("two_sets compares |A+B|; k must be 1")
        actual = sumset(A, B).cardinality
        bound = freiman_bound(m, d)
        return VerificationRecord(instance, tag, bound, actual, actual >= bound, witness)

    if k < 1:
        raise ValueError("k must be >= 1")
    actual = a_plus_kb(A, B, k).cardinality

    if tag == "k_fold":
        bound = kfold_bound(m, d, k)
        return VerificationRecord(instance, tag, bound, actual, actual >= bound, witness)

    # simplex_exact
    if len(B) != d + 1:
        raise HypothesisError("B is not a simplex vertex set (|B| != d+1)")
    m1 = sum(1 for a in A.points if a in B)
    witness["m1"] = m1
    expected = simplex_exact_count(m, m1, d, k)
    return VerificationRecord(instance, tag, expected, actual, actual == expected, witness)
