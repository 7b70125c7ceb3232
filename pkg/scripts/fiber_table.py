"""Enumerate the candidate covers over each stable genus-2 base type and tabulate the survivors."""

import argparse
from collections import Counter
from dataclasses import dataclass

from prymcheck import covers


@dataclass
class TableConfig:
    reasons: bool = False  # also break down rejected candidates by reason


def main(cfg):
    total = 0
    for base in covers.BaseType:
        cands = list(covers.enumerate_candidates(base))
        total += len(cands)
        res = covers.classify_fiber(base)
        labels = ", ".join(res.types) or "-"
        print(f"{base.name:28s} {len(cands):4d} candidates  {len(res.witnesses):3d} survive  types: {labels}")
        if cfg.reasons:
            for why, n in Counter(c.rejection for c in cands if c.rejection).most_common():
                print(f"    {n:4d}  {why}")
    cat = covers.fiber_catalog()
    print(f"\n{total} candidates; types {cat.types}; unique up to isomorphism {cat.unique}")
    for s, ts in cat.strata.items():
        print(f"{s}: {ts}")
    print(f"S1 and S2 meet in {cat.intersection()}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--reasons", action="store_true")
    main(TableConfig(reasons=ap.parse_args().reasons))
