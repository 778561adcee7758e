"""Tail splittings of zeta and L against their explicit bounds; prints the tightest cases."""

import argparse
from dataclasses import dataclass

from zeta_symmetry.dirichlet import tail_bound_sweep


@dataclass
class Config:
    show: int = 10


def main(cfg: Config) -> None:
    checks = tail_bound_sweep()
    bad = [c for c in checks if not c.ok]
    print(f"{len(checks)} checks, {len(bad)} violations, "
          f"max reconstruction error {max(c.reconstruction_error for c in checks):.2e}")
    print("kind  quantity   sigma     t     N  observed/bound")
    for c in sorted(checks, key=lambda c: c.observed / c.bound, reverse=True)[:cfg.show]:
        print(f"{c.kind:5s} {c.quantity:9s} {c.s.real:5.2f} {c.s.imag:6.1f} {c.N:5d}  {c.observed / c.bound:.4f}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--show", type=int, default=Config.show)
    main(Config(p.parse_args().show))
