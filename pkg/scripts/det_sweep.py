"""Evaluate det A at every (c1, c2) = (z^a, z^b) for both matrix variants."""

import argparse
from dataclasses import dataclass

from prymcheck import mulmap
from prymcheck.linalg import det


@dataclass
class SweepConfig:
    variants: tuple = ("printed", "derived")
    show_values: bool = False


def main(cfg):
    target = mulmap.det_formula()
    for name in cfg.variants:
        A = mulmap.VARIANTS[name]()
        d = det(A)
        sign = "+7F" if d == target else "-7F" if d == -target else "other"
        table = mulmap.vanishing_sweep(A)
        print(f"{name}: det A = {sign}, {sum(map(sum, table))} nonzero cells")
        print(mulmap.render_table(table))
        if cfg.show_values:
            for a in range(7):
                for b in range(7):
                    if table[a][b]:
                        print(f"  ({a},{b}): {mulmap.det_at(A, a, b)}")
        print()


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--variant", choices=sorted(mulmap.VARIANTS), action="append")
    ap.add_argument("--values", action="store_true", help="print the nonzero determinants")
    args = ap.parse_args()
    cfg = SweepConfig(show_values=args.values)
    if args.variant:
        cfg.variants = tuple(args.variant)
    main(cfg)
