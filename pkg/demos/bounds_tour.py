"""
Tour of the sumset cardinality bounds on small planar examples.

Usage:
    python3 demos/bounds_tour.py

Walks through the package's four bound families on hand-sized inputs:
  1. |A+A| against the lower bound m(d+1) - d(d+1)/2
  2. |A + vert A| against the same bound
  3. |A+kB| against the k-fold lower bound, B a proper superset hull
  4. |A+kB| against the exact simplex count when B is a simplex

Every number printed is computed twice: once by brute-force
enumeration, once by closed formula, and compared exactly.
"""

from __future__ import annotations

from sumsethull.bounds import (
    freiman_bound,
    kfold_bound,
    simplex_exact_count,
    verify_theorem,
)
from sumsethull.geometry import PointSet, vertex_set
from sumsethull.sumsets import a_plus_kb, sumset


def show(record):
    relation = "==" if record.bound == record.actual else ("<=" if record.satisfied else "VIOLATED")
    print(
        f"  {record.theorem:14s} bound {record.bound:4d} {relation} actual {record.actual:4d}"
    )


def main() -> None:
    # A proper planar 5-point set: unit square plus an interior point.
    A = PointSet(2, ((0, 0), (0, 1), (1, 0), (1, 1), (2, 2)))
    print(f"A = {list(A.points)}  (m={len(A)}, d={A.dim})")
    print(f"vertices of A: {list(vertex_set(A).points)}")
    print()

    print("1. doubling |A+A|")
    show(verify_theorem("freiman", A))
    print(f"   closed form: freiman_bound({len(A)},2) = {freiman_bound(len(A), 2)}")
    print()

    print("2. adding only the extremal points |A + vert A|")
    show(verify_theorem("vertex_sum", A))
    print()

    # B is a triangle whose hull contains A.
    B = PointSet(2, ((-1, -1), (5, 0), (0, 5)))
    print(f"B = {list(B.points)}  (simplex containing A)")
    print("3. k-fold sums |A+kB| vs the k-fold lower bound")
    for k in (1, 2, 3):
        show(verify_theorem("k_fold", A, B, k=k, instance=f"tour-k{k}"))
        print(f"   closed form: kfold_bound({len(A)},2,{k}) = {kfold_bound(len(A), 2, k)}")
    print()

    print("4. exact count when A touches the simplex vertices")
    A2 = PointSet(2, ((-1, -1), (5, 0), (0, 0), (1, 1)))  # two vertices of B
    m, m1 = len(A2), 2
    for k in (1, 2, 3):
        actual = a_plus_kb(A2, B, k).cardinality
        expected = simplex_exact_count(m, m1, 2, k)
        flag = "ok" if actual == expected else "MISMATCH"
        print(f"  k={k}: |A+kB| = {actual}, formula = {expected}  [{flag}]")
    print()

    doubled = sumset(A, A)
    print(f"for the record, A+A = {len(doubled.points)} points; first five: {list(doubled.points.points[:5])}")


if __name__ == "__main__":
    main()
