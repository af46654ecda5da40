"""Seeded instance generation and verification campaigns.

Instances are deterministic functions of (master seed, index): each
index gets its own counter-keyed random stream, so campaigns can be
re-run, subdivided, or parallelized without changing any instance.
Campaigns sweep the cardinality bounds for violations (expected: none)
and probe the two open questions, for which reports are marked
exploratory and never asserted, except the nested-chain question in
dimension 1 where the bound is elementary.
"""

from __future__ import annotations

import csv
import io
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

from .bounds import THEOREM_TAGS, kfold_bound, verify_theorem
from .geometry import PointSet, affine_rank, vertex_set
from .hull import lattice_points
from .subsums import SubsumInstance, subsum_report
from .sumsets import sumset

CAMPAIGN_TAGS = THEOREM_TAGS + ("subsum", "question1", "question2")

_MAX_REDRAWS = 1000


@dataclass(frozen=True)
class GeneratorConfig:
    """Shape of the random instances drawn by one campaign.

    Coordinates are integers in [-coord_range, coord_range].  B is
    redrawn until proper d-dimensional; A is sampled from the lattice
    points of conv B, so the containment hypotheses hold by
    construction.  intersection_size, when set, forces |A cap B| for
    simplex campaigns.
    """

    dim: int
    a_size: tuple[int, int]
    b_size: tuple[int, int]
    coord_range: int
    k: int
    seed: int | str
    instances: int
    intersection_size: int | None = None

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dim must be >= 1")
        if self.coord_range < 1:
            raise ValueError("coord_range must be >= 1")
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.instances < 1:
            raise ValueError("instances must be >= 1")
        for name, (lo, hi) in (("a_size", self.a_size), ("b_size", self.b_size)):
            if lo < 1 or hi < lo:
                raise ValueError(f"config ranges infeasible: empty {name} range")
        if self.intersection_size is not None and not (
            0 <= self.intersection_size <= self.dim + 1
        ):
            raise ValueError("intersection_size must lie in [0, dim+1]")

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "a_size": list(self.a_size),
            "b_size": list(self.b_size),
            "coord_range": self.coord_range,
            "k": self.k,
            "seed": self.seed,
            "instances": self.instances,
            "intersection_size": self.intersection_size,
        }


def _rng_for(cfg: GeneratorConfig, index: int) -> random.Random:
    return random.Random(f"{cfg.seed}:{index}")


def _decode_point(idx: int, dim: int, c: int) -> tuple[int, ...]:
    width = 2 * c + 1
    coords = []
    for _ in range(dim):
        idx, r = divmod(idx, width)
        coords.append(r - c)
    return tuple(coords)


def _draw_proper_b(rng: random.Random, cfg: GeneratorConfig, size: int) -> PointSet:
    d, c = cfg.dim, cfg.coord_range
    total = (2 * c + 1) ** d
    if size < d + 1:
        raise ValueError("config ranges infeasible: fewer than d+1 points requested for B")
    if size > total:
        raise ValueError("config ranges infeasible: more points than lattice cells")
    for _ in range(_MAX_REDRAWS):
        pts = sorted(_decode_point(i, d, c) for i in rng.sample(range(total), size))
        if affine_rank(pts) == d:
            return PointSet(d, tuple(pts))
    raise ValueError("config ranges infeasible: could not draw a proper B")


def _sample_a(rng: random.Random, cfg: GeneratorConfig, lattice: list) -> PointSet:
    lo, hi = cfg.a_size
    size = min(max(rng.randint(lo, hi), 1), len(lattice))
    return PointSet(cfg.dim, tuple(sorted(rng.sample(lattice, size))))


def _force_proper(rng: random.Random, cfg: GeneratorConfig, lattice: list, B: PointSet) -> PointSet:
    """Sample A from the lattice until it is proper d-dimensional.

    B's points all lie in the lattice and are proper, so a deterministic
    fallback that merges in an independent subset of B always exists.
    """
    d = cfg.dim
    for _ in range(200):
        A = _sample_a(rng, cfg, lattice)
        if len(A) >= d + 1 and affine_rank(A.points) == d:
            return A
    base = list(_sample_a(rng, cfg, lattice).points)
    for p in B.points:
        if affine_rank(base + [p]) > affine_rank(base):
            base.append(p)
    return PointSet(d, tuple(sorted(set(base))))


def _draw_simplex_instance(rng: random.Random, cfg: GeneratorConfig):
    d = cfg.dim
    for _ in range(_MAX_REDRAWS):
        B = _draw_proper_b(rng, cfg, d + 1)
        lattice = lattice_points(B)
        if cfg.intersection_size is None:
            return _sample_a(rng, cfg, lattice), B
        m1 = cfg.intersection_size
        non_vertices = [p for p in lattice if p not in B.points]
        lo, hi = cfg.a_size
        target = max(rng.randint(lo, hi), m1, 1)
        extra = min(target - m1, len(non_vertices))
        if m1 + extra < 1:
            continue
        chosen = rng.sample(list(B.points), m1) + rng.sample(non_vertices, extra)
        return PointSet(d, tuple(sorted(chosen))), B
    raise ValueError("config ranges infeasible: no simplex admits the requested A")


def generate_instance(cfg: GeneratorConfig, index: int, tag: str = "k_fold"):
    """Deterministic instance for (seed, index): returns (A, B).

    freiman/vertex_sum additionally force A proper; simplex_exact draws
    B with exactly d+1 affinely independent points and honors
    intersection_size.
    """
    rng = _rng_for(cfg, index)
    if tag == "simplex_exact":
        return _draw_simplex_instance(rng, cfg)
    lo, hi = cfg.b_size
    B = _draw_proper_b(rng, cfg, rng.randint(lo, hi))
    lattice = lattice_points(B)
    if tag in ("freiman", "vertex_sum"):
        return _force_proper(rng, cfg, lattice, B), B
    return _sample_a(rng, cfg, lattice), B


def generate_subsum_instance(cfg: GeneratorConfig, index: int) -> SubsumInstance:
    """k nonempty integer sets with values in [-c, c], sizes from a_size."""
    if cfg.k < 2:
        raise ValueError("k must be >= 2 (bound divides by k-1)")
    rng = _rng_for(cfg, index)
    lo, hi = cfg.a_size
    c = cfg.coord_range
    sets = []
    for _ in range(cfg.k):
        size = min(rng.randint(lo, hi), 2 * c + 1)
        sets.append(tuple(sorted(rng.sample(range(-c, c + 1), size))))
    return SubsumInstance(tuple(sets))


def generate_nested_chain(cfg: GeneratorConfig, index: int):
    """A and B_1..B_k with A in conv B_1 and conv B_j in conv B_{j+1}.

    Built outside-in: B_k from the coordinate box, each inner B_j from
    the lattice points of conv B_{j+1}, and A from conv B_1.
    """
    rng = _rng_for(cfg, index)
    d = cfg.dim
    lo, hi = cfg.b_size
    chain = [None] * cfg.k
    chain[cfg.k - 1] = _draw_proper_b(rng, cfg, rng.randint(lo, hi))
    for j in range(cfg.k - 2, -1, -1):
        lattice = lattice_points(chain[j + 1])
        size = min(max(rng.randint(lo, hi), d + 1), len(lattice))
        B = None
        for _ in range(200):
            pts = sorted(rng.sample(lattice, size))
            if affine_rank(pts) == d:
                B = PointSet(d, tuple(pts))
                break
        if B is None:
            base = []
            for p in chain[j + 1].points:
                if affine_rank(base + [p]) > affine_rank(base):
                    base.append(p)
            B = PointSet(d, tuple(sorted(base)))
        chain[j] = B
    A = _sample_a(rng, cfg, lattice_points(chain[0]))
    return A, tuple(chain)


@dataclass(frozen=True)
class CampaignReport:
    """Outcome of one campaign: per-instance records plus a summary.

    Byte-identical across runs with the same config: serialization uses
    sorted keys and fixed separators, and every value derives from the
    seeded streams.
    """

    tag: str
    config: GeneratorConfig
    records: tuple = field(default=())
    summary: dict = field(default_factory=dict)

    @property
    def violations(self) -> int:
        return self.summary.get("violations", 0)

    @property
    def assertable(self) -> bool:
        return self.summary.get("assertable", True)

    def to_dict(self) -> dict:
        return {
            "tag": self.tag,
            "config": self.config.to_dict(),
            "records": list(self.records),
            "summary": self.summary,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["seed", "index", "tag", "bound", "actual", "slack"])
        for rec in self.records:
            writer.writerow(
                [
                    self.config.seed,
                    rec["index"],
                    self.tag,
                    rec.get("bound", ""),
                    rec.get("actual", ""),
                    rec.get("slack", ""),
                ]
            )
        return buf.getvalue()


def _theorem_campaign(cfg: GeneratorConfig, tag: str) -> CampaignReport:
    records = []
    violations = 0
    min_slack = None
    witness = None
    for i in range(cfg.instances):
        A, B = generate_instance(cfg, i, tag)
        if tag in ("freiman", "vertex_sum"):
            rec = verify_theorem(tag, A, instance=f"{cfg.seed}:{i}")
        else:
            k = 1 if tag == "two_sets" else cfg.k
            rec = verify_theorem(tag, A, B, k=k, instance=f"{cfg.seed}:{i}")
        slack = rec.actual - rec.bound
        entry = {"index": i, "slack": slack, **rec.to_dict()}
        records.append(entry)
        if not rec.satisfied:
            violations += 1
        if min_slack is None or slack < min_slack:
            min_slack = slack
            witness = entry
    summary = {
        "instances": cfg.instances,
        "violations": violations,
        "min_slack": min_slack,
        "extremal_witness": witness,
        "assertable": True,
        "exploratory": False,
    }
    return CampaignReport(tag, cfg, tuple(records), summary)


def _subsum_campaign(cfg: GeneratorConfig) -> CampaignReport:
    records = []
    violations = 0
    min_slack = None
    witness = None
    for i in range(cfg.instances):
        inst = generate_subsum_instance(cfg, i)
        rep = subsum_report(inst)
        slack = Fraction(rep.s_prime_size) - rep.bound
        entry = {
            "index": i,
            "instance": inst.to_dict(),
            "slack": str(slack),
            "bound": str(rep.bound),
            "actual": rep.s_prime_size,
            **rep.to_dict(),
        }
        records.append(entry)
        if not rep.chain_satisfied:
            violations += 1
        if min_slack is None or slack < min_slack:
            min_slack = slack
            witness = entry
    summary = {
        "instances": cfg.instances,
        "violations": violations,
        "min_slack": str(min_slack),
        "extremal_witness": witness,
        "assertable": True,
        "exploratory": False,
    }
    return CampaignReport("subsum", cfg, tuple(records), summary)


def generate_vector_family(cfg: GeneratorConfig, index: int) -> tuple[PointSet, ...]:
    """k proper d-dimensional sets from the coordinate box, seeded."""
    if cfg.k < 2:
        raise ValueError("k must be >= 2 (bound divides by k-1)")
    rng = _rng_for(cfg, index)
    lo, hi = cfg.a_size
    return tuple(
        _draw_proper_b(rng, cfg, max(rng.randint(lo, hi), cfg.dim + 1))
        for _ in range(cfg.k)
    )


def _subsum_sizes_1d(inst: SubsumInstance) -> tuple[int, int, list[int]]:
    rep = subsum_report(inst)
    return rep.s_size, rep.s_prime_size, list(rep.s_i_sizes)


def _subsum_sizes_vector(family: tuple[PointSet, ...]) -> tuple[int, int, list[int]]:
    # Leave-one-out sums S_i, their extremal-point completions
    # S_i + vert(A_i), and the union S'; plain d-dimensional sumsets.
    k = len(family)
    s_i_sizes = []
    union: set = set()
    whole = family[0]
    for X in family[1:]:
        whole = sumset(whole, X).points
    for i in range(k):
        partial = None
        for j in range(k):
            if j == i:
                continue
            partial = family[j] if partial is None else sumset(partial, family[j]).points
        s_i_sizes.append(len(partial))
        completed = sumset(partial, vertex_set(family[i])).points
        union.update(completed.points)
    return len(whole), len(union), s_i_sizes


def _question1_campaign(cfg: GeneratorConfig) -> CampaignReport:
    """Observed minimum of |S'| / sum |S_i| against the conjectured ratio.

    In dimension 1 the instances are plain integer-set chains; in
    higher dimensions each A_i is a proper d-dimensional set and the
    endpoint pair generalizes to the extremal points of A_i.  Purely
    exploratory: the conjecture carries an unquantified epsilon and
    size threshold, so nothing is asserted; raw ratios are recorded
    for inspection.
    """
    if cfg.k < 2:
        raise ValueError("k must be >= 2 (bound divides by k-1)")
    records = []
    min_ratio = None
    witness = None
    conjectured = Fraction(cfg.k ** (cfg.dim - 1), (cfg.k - 1) ** cfg.dim)
    for i in range(cfg.instances):
        if cfg.dim == 1:
            inst = generate_subsum_instance(cfg, i)
            s_size, s_prime_size, s_i_sizes = _subsum_sizes_1d(inst)
            instance_blob = inst.to_dict()
        else:
            family = generate_vector_family(cfg, i)
            s_size, s_prime_size, s_i_sizes = _subsum_sizes_vector(family)
            instance_blob = {"sets": [[list(p) for p in X.points] for X in family]}
        ratio = Fraction(s_prime_size, sum(s_i_sizes))
        entry = {
            "index": i,
            "instance": instance_blob,
            "ratio": str(ratio),
            "bound": str(conjectured),
            "actual": str(ratio),
            "slack": str(ratio - conjectured),
            "s_size": s_size,
            "s_prime_size": s_prime_size,
            "sum_s_i": sum(s_i_sizes),
        }
        records.append(entry)
        if min_ratio is None or ratio < min_ratio:
            min_ratio = ratio
            witness = entry
    summary = {
        "instances": cfg.instances,
        "violations": 0,
        "observed_min_ratio": str(min_ratio),
        "conjectured_ratio": str(conjectured),
        "extremal_witness": witness,
        "assertable": False,
        "exploratory": True,
    }
    return CampaignReport("question1", cfg, tuple(records), summary)


def _question2_campaign(cfg: GeneratorConfig) -> CampaignReport:
    """Nested-hull sums A + B_1 + ... + B_k against the k-fold bound.

    Asserted only in dimension 1, where the estimate is elementary;
    higher dimensions record outcomes without any claim.
    """
    records = []
    violations = 0
    min_slack = None
    witness = None
    for i in range(cfg.instances):
        A, chain = generate_nested_chain(cfg, i)
        current = A
        for B in chain:
            current = sumset(current, B).points
        actual = len(current)
        bound = kfold_bound(len(A), cfg.dim, cfg.k)
        slack = actual - bound
        entry = {
            "index": i,
            "a": [list(p) for p in A.points],
            "chain": [[list(p) for p in B.points] for B in chain],
            "k": cfg.k,
            "bound": bound,
            "actual": actual,
            "slack": slack,
            "satisfied": actual >= bound,
        }
        records.append(entry)
        if actual < bound:
            violations += 1
        if min_slack is None or slack < min_slack:
            min_slack = slack
            witness = entry
    summary = {
        "instances": cfg.instances,
        "violations": violations,
        "min_slack": min_slack,
        "extremal_witness": witness,
        "assertable": cfg.dim == 1,
        "exploratory": True,
    }
    return CampaignReport("question2", cfg, tuple(records), summary)


def run_campaign(cfg: GeneratorConfig, tag: str) -> CampaignReport:
    """Run one campaign; records are merged in index order."""
    if tag in THEOREM_TAGS:
        return _theorem_campaign(cfg, tag)
    if tag == "subsum":
        return _subsum_campaign(cfg)
    if tag == "question1":
        return _question1_campaign(cfg)
    if tag == "question2":
        return _question2_campaign(cfg)
    raise ValueError(f"unknown campaign tag: {tag}")


def iter_exhaustive_subsum_instances(max_value: int, max_size: int, k: int):
    """Every SubsumInstance with k subsets of {0..max_value}.

    Documented slow mode for tiny 1-D ranges only: the instance count is
    (sum_s C(max_value+1, s))^k, exponential in every argument.
    """
    values = range(max_value + 1)
    pool = [
        combo
        for size in range(1, max_size + 1)
        for combo in combinations(values, size)
    ]
    for sets in product(pool, repeat=k):
        yield SubsumInstance(tuple(sets))
