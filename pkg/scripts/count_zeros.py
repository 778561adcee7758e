"""Zero counts N_eh, N_h, N_zeta, N_L against their main terms over a range of heights."""

import argparse
import csv
import sys
import warnings
from dataclasses import dataclass

from zeta_symmetry.zeros import StepTooCoarse, count_report


@dataclass
class Config:
    heights: tuple = (15.0, 25.0, 50.0, 75.0, 100.0, 150.0)
    step: float = 0.05


def main(cfg: Config) -> None:
    warnings.simplefilter("ignore", StepTooCoarse)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["T", "N_eh", "main_eh", "N_h", "N_zeta", "N_L", "N_eh_minus_2N_L", "decomposition_ok"])
    for T in cfg.heights:
        r = count_report(T, step=cfg.step)
        w.writerow([f"{r.T:g}", r.N_eh, f"{r.asymptotic_eh:.3f}", r.N_h, r.N_zeta, r.N_L, r.twice_L_gap,
                    r.decomposition_ok])


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--heights", type=float, nargs="+", default=list(Config.heights))
    p.add_argument("--step", type=float, default=Config.step)
    a = p.parse_args()
    main(Config(tuple(a.heights), a.step))
