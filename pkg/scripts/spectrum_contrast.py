"""Side-by-side eigenvalue tables for the two constructions.

The rotation route puts the integer pair into (n1-n2, n1+n2+1); the
imaginary-scale route swaps the roles, which moves every decay rate
into the off-diagonal states. Run with --n-cap to widen the table.
"""

import argparse
import sys
from dataclasses import dataclass

from bateman.dynamics import classify, eigen_record
from bateman.params import derive_params


@dataclass
class Config:
    m: float = 1.0
    gamma: float = 1.0
    k: float = 1.25
    n_cap: int = 4
    branch: str = "+"


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-cap", type=int, default=4)
    ap.add_argument("--branch", choices="+-", default="+")
    ap.add_argument("--gamma", type=float, default=1.0)
    args = ap.parse_args(argv)
    cfg = Config(n_cap=args.n_cap, branch=args.branch, gamma=args.gamma)

    params = derive_params(m=cfg.m, gamma=cfg.gamma, k=cfg.k)
    print(f"# omega={params.omega:.6g} lambda={params.lam:.6g} branch={cfg.branch}")
    print(f"{'state':>8} | {'rotation re,im':>22} {'class':>9} | "
          f"{'imag-scale re,im':>22} {'class':>9}")
    for total in range(cfg.n_cap + 1):
        for n1 in range(total, -1, -1):
            n2 = total - n1
            cells = []
            for approach in ("ft", "is"):
                rec = eigen_record(approach, cfg.branch, n1, n2)
                ev = rec.as_complex(params)
                cls = classify(approach, cfg.branch, n1, n2).value
                cells.append(f"{ev.real:+10.4f},{ev.imag:+10.4f} {cls:>9}")
            print(f"({n1:2d},{n2:2d}) | {cells[0]} | {cells[1]}")
    stable = sum(
        1
        for n1 in range(cfg.n_cap + 1)
        for n2 in range(cfg.n_cap + 1 - n1)
        if classify("is", cfg.branch, n1, n2).value == "stable"
    )
    print(f"# imag-scale stable states up to n_cap: {stable} (all with n1 = n2)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
