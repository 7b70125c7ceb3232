"""Achievable Shimura-family dimensions sum r*s over a grid of (e0, m)."""

import argparse
from dataclasses import dataclass

from prymcheck import shimura


@dataclass
class ScanConfig:
    max_e0: int = 4
    max_m: int = 7


def main(cfg):
    print("e0  m  max  dims")
    for e0 in range(1, cfg.max_e0 + 1):
        for m in range(1, cfg.max_m + 1):
            r = shimura.signature_dims(shimura.SignatureProblem(e0, m))
            print(f"{e0:2d} {m:2d} {r.maximum:4d}  {sorted(r.dims)}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-e0", type=int, default=ScanConfig.max_e0)
    ap.add_argument("--max-m", type=int, default=ScanConfig.max_m)
    a = ap.parse_args()
    main(ScanConfig(a.max_e0, a.max_m))
