"""Consecutive-gap histograms of the critical-line zeros of E, zeta, L and the zeros of h.

Also lists the closest E-zero pairs, which are where a coarse scan would merge zeros.
"""

import argparse
import warnings
from dataclasses import dataclass

import numpy as np

from zeta_symmetry.zeros import FunctionTag, StepTooCoarse, gap_histogram, h_zeros_in_strip, scan_critical_line


@dataclass
class Config:
    T: float = 100.0
    bin_width: float = 0.5
    closest: int = 5


def main(cfg: Config) -> None:
    warnings.simplefilter("ignore", StepTooCoarse)
    lists = {tag: [r.t for r in scan_critical_line(tag, cfg.T)] for tag in (FunctionTag.EH, FunctionTag.ZETA, FunctionTag.L)}
    lists[FunctionTag.H] = [r.t for r in h_zeros_in_strip(cfg.T) if r.sigma == 0.0]
    for tag, ts in lists.items():
        print(f"{tag.value}: {len(ts)} zeros")
        for lo, hi, n in gap_histogram(ts, cfg.bin_width):
            print(f"  [{lo:5.2f}, {hi:5.2f})  {'#' * n} {n}")
    t = np.array(lists[FunctionTag.EH])
    gaps = np.diff(t)
    print("closest E zeros:")
    for i in np.argsort(gaps)[:cfg.closest]:
        print(f"  {t[i]:.8f}  {t[i + 1]:.8f}  gap {gaps[i]:.6f}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--T", type=float, default=Config.T)
    p.add_argument("--bin-width", type=float, default=Config.bin_width)
    a = p.parse_args()
    main(Config(a.T, a.bin_width))
