"""
Seeded counterexample-search campaigns over the open sweeps.

Usage:
    python3 demos/campaign_hunt.py [--seed SEED] [--instances N]

Runs three campaigns and prints their summaries:
  1. question1 (exploratory, never asserted): the observed ratio
     |A+kB| / |A+B| against the conjectured floor k^(d-1)/(k-1)^d.
  2. question2 in dimension 1 (assertable): nested chains
     A + B_1 + ... + B_k against the k-fold lower bound.
  3. question2 in dimension 2 (report-only): same sweep, recorded
     without any claim.

A nonzero violation count in an assertable campaign would be a
counterexample; the extremal witness pinpoints the tightest instance.
"""

from __future__ import annotations

import argparse

from sumsethull.explorer import GeneratorConfig, run_campaign


def summarize(report) -> None:
    s = report.summary
    mode = "assertable" if report.assertable else "report-only"
    print(f"campaign {report.tag} ({mode}): {s['instances']} instances, {s['violations']} violations")
    if s.get("min_slack") is not None:
        print(f"  min slack {s['min_slack']}")
    if s.get("min_ratio") is not None:
        print(f"  min ratio {s['min_ratio']} vs conjectured {s['conjectured']}")
    witness = s.get("extremal_witness")
    if witness is not None:
        keys = [k for k in ("index", "bound", "actual", "slack", "ratio") if k in witness]
        print(f"  extremal witness: {{{', '.join(f'{k}: {witness[k]}' for k in keys)}}}")
    print()


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[1])
    ap.add_argument("--seed", default="hunt", help="campaign seed (default: hunt)")
    ap.add_argument("--instances", type=int, default=200, help="instances per campaign")
    args = ap.parse_args()

    q1 = GeneratorConfig(
        dim=2, a_size=(3, 6), b_size=(3, 5), coord_range=4,
        k=2, seed=args.seed, instances=args.instances,
    )
    summarize(run_campaign(q1, "question1"))

    q2_line = GeneratorConfig(
        dim=1, a_size=(1, 6), b_size=(2, 4), coord_range=8,
        k=3, seed=args.seed, instances=args.instances,
    )
    summarize(run_campaign(q2_line, "question2"))

    q2_plane = GeneratorConfig(
        dim=2, a_size=(1, 5), b_size=(3, 4), coord_range=4,
        k=2, seed=args.seed, instances=args.instances,
    )
    summarize(run_campaign(q2_plane, "question2"))


if __name__ == "__main__":
    main()
