"""Every graph move on the battery: homomorphism, contraction and commuting-square checks."""
import argparse
import time
from collections import Counter
from dataclasses import dataclass

from hopfgauge.catalog import move_battery
from hopfgauge.hopf import drinfeld_double, group_algebra, standard_group
from hopfgauge.movemaps import contraction_report, homomorphism_report, move_map, square_report


@dataclass
class MoveSweepConfig:
    group: str = "Z2"
    max_edges: int = 2
    square: bool = True
    verbose: bool = False


def sweep(cfg: MoveSweepConfig) -> int:
    K, qt = drinfeld_double(group_algebra(standard_group(cfg.group)))
    kinds, failures, square_fail = Counter(), 0, Counter()
    t0 = time.perf_counter()
    for name, spec, res in move_battery(cfg.max_edges):
        mm = move_map(res, K, qt)
        failed = homomorphism_report(mm).failed()
        if res.kind.startswith("contract"):
            failed += contraction_report(mm).failed()
        kinds[res.kind] += 1
        if failed:
            failures += 1
            print(f"FAIL {name} {spec}: {failed}")
        if cfg.square and not square_report(mm).passed:
            square_fail[res.kind] += 1
        if cfg.verbose:
            print(f"{name:16} {spec:22} ok={not failed}")
    print("moves:", dict(sorted(kinds.items())))
    if cfg.square:
        print("commuting square fails:", dict(sorted(square_fail.items())) or "none")
    print(f"{failures} failures, {time.perf_counter() - t0:.1f} s")
    return failures


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--group", default="Z2")
    ap.add_argument("--max-edges", type=int, default=2)
    ap.add_argument("--no-square", action="store_true")
    ap.add_argument("-v", "--verbose", action="store_true")
    a = ap.parse_args()
    raise SystemExit(1 if sweep(MoveSweepConfig(a.group, a.max_edges, not a.no_square, a.verbose)) else 0)
