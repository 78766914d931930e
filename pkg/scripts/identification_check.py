"""Single-edge and single-loop algebras for the Drinfel'd double of a group algebra."""
import argparse
from dataclasses import dataclass, field
from typing import List

from hopfgauge.hopf import drinfeld_double, group_algebra, standard_group
from hopfgauge.identifications import (edge_identification_report, heisenberg_anti_isomorphism_report,
                                       literal_flip_report, loop_identification_report)


@dataclass
class IdentificationConfig:
    groups: List[str] = field(default_factory=lambda: ["Z2", "Z3", "S3"])


def run(cfg: IdentificationConfig):
    for name in cfg.groups:
        H = group_algebra(standard_group(name))
        K, qt = drinfeld_double(H)
        print(f"== {name}")
        for rep in (loop_identification_report(K, qt), edge_identification_report(H),
                    heisenberg_anti_isomorphism_report(H), literal_flip_report(H)):
            print(rep)


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--groups", nargs="+", default=IdentificationConfig().groups)
    run(IdentificationConfig(ap.parse_args().groups))
