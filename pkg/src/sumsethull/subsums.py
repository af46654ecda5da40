"""Leave-one-out sums of integer sets and the endpoint chain bound.

For nonempty finite integer sets A_1, ..., A_k (k >= 2) write S for the
complete sum A_1 + ... + A_k and S_i for the sum leaving A_i out.
Replacing the omitted set's role differently: S_i' adds back only the
two endpoints of A_i, and S' is the union of the S_i'.  The chain

    |S| >= |S'| >= (sum_i |S_i| - 1) / (k - 1)

is verified with the right side kept as an exact rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def endpoints(A) -> tuple[int, ...]:
    """The smallest and largest elements; a single element stays alone."""
    values = sorted(set(A))
    if not values:
        raise ValueError("empty integer set has no endpoints")
    if len(values) == 1:
        return (values[0],)
    return (values[0], values[-1])


def sumset_1d(X, Y) -> tuple[int, ...]:
    """All pairwise sums of two nonempty integer sets, sorted."""
    return tuple(sorted({x + y for x in X for y in Y}))


@dataclass(frozen=True)
class SubsumInstance:
    """k nonempty finite integer sets, k >= 2."""

    sets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        normalized = tuple(tuple(sorted(set(int(v) for v in s))) for s in self.sets)
        if len(normalized) < 2:
            raise ValueError("k must be >= 2 (bound divides by k-1)")
        for s in normalized:
            if not s:
                raise ValueError("every set must be nonempty")
        object.__setattr__(self, "sets", normalized)

    @property
    def k(self) -> int:
        return len(self.sets)

    def to_dict(self) -> dict:
        return {"sets": [list(s) for s in self.sets]}

    @classmethod
    def from_dict(cls, data: dict) -> "SubsumInstance":
        return cls(tuple(tuple(s) for s in data["sets"]))


@dataclass(frozen=True)
class SubsumReport:
    s_size: int
    s_prime_size: int
    s_i_sizes: tuple[int, ...]
    s_i_prime_sizes: tuple[int, ...]
    bound: Fraction
    chain_satisfied: bool

    def to_dict(self) -> dict:
        return {
            "s_size": self.s_size,
            "s_prime_size": self.s_prime_size,
            "s_i_sizes": list(self.s_i_sizes),
            "s_i_prime_sizes": list(self.s_i_prime_sizes),
            "bound": str(self.bound),
            "chain_satisfied": self.chain_satisfied,
        }


def subsum_report(instance: SubsumInstance) -> SubsumReport:
    """Compute S, S', all S_i and S_i' by brute force and test the chain.

    Leave-one-out sums come from prefix/suffix partial sums, so the
    whole report costs O(k) pairwise sumsets.
    """
    sets = instance.sets
    k = len(sets)
    # prefix[i] = A_1 + ... + A_i, suffix[i] = A_i + ... + A_k
    prefix = [(0,)]
    for s in sets:
        prefix.append(sumset_1d(prefix[-1], s))
    suffix = [(0,)] * (k + 1)
    for i in range(k - 1, -1, -1):
        suffix[i] = sumset_1d(sets[i], suffix[i + 1])
    S = prefix[k]
    s_i_sizes = []
    s_i_prime_sizes = []
    s_prime: set[int] = set()
    for i in range(k):
        S_i = sumset_1d(prefix[i], suffix[i + 1])
        S_i_prime = sumset_1d(S_i, endpoints(sets[i]))
        s_i_sizes.append(len(S_i))
        s_i_prime_sizes.append(len(S_i_prime))
        s_prime.update(S_i_prime)
    bound = Fraction(sum(s_i_sizes) - 1, k - 1)
    chain = len(S) >= len(s_prime) and Fraction(len(s_prime)) >= bound
    return SubsumReport(
        len(S), len(s_prime), tuple(s_i_sizes), tuple(s_i_prime_sizes), bound, chain
    )
