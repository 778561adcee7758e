"""Growth ratios |f(sigma+it)| / t^(1-sigma) for zeta and L over a grid of sigma_min and t_max."""

import argparse
import csv
import sys
from dataclasses import dataclass

from zeta_symmetry.dirichlet import growth_bound_check


@dataclass
class Config:
    sigma_mins: tuple = (0.5, 0.7, 0.9)
    t_maxes: tuple = (50.0, 200.0)
    t_step: float = 0.25


def main(cfg: Config) -> None:
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["sigma_min", "t_max", "max_ratio_zeta", "max_ratio_L", "slope_zeta", "slope_L",
                "envelope_slope_zeta", "envelope_slope_L"])
    for sm in cfg.sigma_mins:
        for tm in cfg.t_maxes:
            g = growth_bound_check(sm, tm, t_step=cfg.t_step)
            w.writerow([sm, tm] + [f"{v:.4f}" for v in (g.max_ratio_zeta, g.max_ratio_L, g.slope_zeta, g.slope_L,
                                                         g.envelope_slope_zeta, g.envelope_slope_L)])


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--sigma-mins", type=float, nargs="+", default=list(Config.sigma_mins))
    p.add_argument("--t-maxes", type=float, nargs="+", default=list(Config.t_maxes))
    p.add_argument("--t-step", type=float, default=Config.t_step)
    a = p.parse_args()
    main(Config(tuple(a.sigma_mins), tuple(a.t_maxes), a.t_step))
