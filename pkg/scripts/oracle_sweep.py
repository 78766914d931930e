"""Orbit counts and flat moduli from enumeration next to the Hopf pipeline."""
import argparse
import time
from dataclasses import dataclass, field
from typing import List

from hopfgauge.catalog import NAMED
from hopfgauge.gauge import build_function_algebra
from hopfgauge.holonomy import moduli_algebra
from hopfgauge.hopf import group_algebra, standard_group, trivial_qt
from hopfgauge.oracle import TooLarge, flat_moduli_dim, invariant_dim


@dataclass
class SweepConfig:
    groups: List[str] = field(default_factory=lambda: ["Z2", "Z3", "S3"])
    graphs: List[str] = field(default_factory=lambda: ["loop", "edge", "theta", "torus", "theta-torus"])
    moduli: bool = True


def sweep(cfg: SweepConfig):
    print(f"{'group':5} {'graph':12} {'orbits':>6} {'A*_inv':>6} {'flat':>5} {'M':>5} {'s':>6}")
    for name in cfg.groups:
        G = standard_group(name)
        K = group_algebra(G)
        for gname in cfg.graphs:
            g = NAMED[gname]()
            t0 = time.perf_counter()
            try:
                orbits = invariant_dim(G, g)
                flat = flat_moduli_dim(G, g) if cfg.moduli else "-"
            except TooLarge:
                print(f"{name:5} {gname:12} too large to enumerate")
                continue
            fa = build_function_algebra(g, K, trivial_qt(K))
            inv = len(fa.invariant_basis())
            m = moduli_algebra(fa).dim if cfg.moduli else "-"
            print(f"{name:5} {gname:12} {orbits:>6} {inv:>6} {flat:>5} {m:>5} {time.perf_counter() - t0:6.1f}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--groups", nargs="+", default=SweepConfig().groups)
    ap.add_argument("--graphs", nargs="+", default=SweepConfig().graphs)
    ap.add_argument("--no-moduli", action="store_true")
    a = ap.parse_args()
    sweep(SweepConfig(a.groups, a.graphs, not a.no_moduli))
