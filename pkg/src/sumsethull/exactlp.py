"""Exact phase-1 simplex method over rationals.

Decides feasibility of systems {x >= 0 : A x = b} with Fraction
arithmetic and Bland's anti-cycling pivot rule, which guarantees
termination without any numerical tie-breaking.  Only feasibility is
needed by the geometry predicates, so no phase-2 is implemented.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

_ZERO = Fraction(0)


def feasible_nonneg(rows: Sequence[Sequence], rhs: Sequence) -> bool:
    """True iff there is x >= 0 with rows . x = rhs, decided exactly.

    ``rows`` is an m x n coefficient matrix (any Fraction-compatible
    entries), ``rhs`` the length-m right-hand side.  Adds one artificial
    variable per constraint and minimises their sum; the system is
    feasible exactly when that minimum is 0.
    """
    m = len(rows)
    if m != len(rhs):
        raise ValueError("matrix and right-hand side sizes differ")
    if m == 0:
        return True
    n = len(rows[0])

    # Tableau rows: n structural columns, m artificial columns, then b >= 0.
    tab: list[list[Fraction]] = []
    for i, (row, b) in enumerate(zip(rows, rhs)):
        if len(row) != n:
            raise ValueError("ragged coefficient matrix")
        r = [Fraction(v) for v in row]
        b = Fraction(b)
        if b < 0:
            r = [-v for v in r]
            b = -b
        art = [_ZERO] * m
        art[i] = Fraction(1)
        tab.append(r + art + [b])

    basis = list(range(n, n + m))
    width = n + m + 1

    # Reduced costs for the phase-1 objective (cost 1 on artificials):
    # z[j] = c_j - sum_i tab[i][j], and the tracked objective value.
    z = [_ZERO] * width
    for j in range(width):
        col_sum = sum((tab[i][j] for i in range(m)), _ZERO)
        cost = _ZERO if j < n else Fraction(1)
        z[j] = cost - col_sum
    z[-1] = -sum((tab[i][-1] for i in range(m)), _ZERO)  # negated objective

    max_pivots = 1000 + 50 * (n + m)
    for _ in range(max_pivots):
        enter = -1
        for j in range(n + m):
            if z[j] < 0:
                enter = j
                break
        if enter < 0:
            return z[-1] == 0
        # Ratio test; ties go to the smallest basic variable index (Bland).
        leave = -1
        best = None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            raise RuntimeError("phase-1 objective unbounded; invariant violated")
        pv = tab[leave][enter]
        tab[leave] = [v / pv for v in tab[leave]]
        prow = tab[leave]
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [a - f * b for a, b in zip(tab[i], prow)]
        if z[enter] != 0:
            f = z[enter]
            z = [a - f * b for a, b in zip(z, prow)]
        basis[leave] = enter
    raise RuntimeError("pivot limit exceeded")
