import pytest

from hopfgauge.catalog import battery, fork, move_battery
from hopfgauge.graph import apply_move
from hopfgauge.hopf import group_algebra, standard_group, trivial_qt
from hopfgauge.movemaps import contraction_report, homomorphism_report, move_map, square_report

CASES = [("path2", "contract-target:e1"), ("path2", "contract-start:e2"), ("path2", "delete:e1"),
         ("loop", "add-loop:v,0"), ("loop", "add-loop:v,1"), ("lollipop_e", "contract-start:e"),
         ("edge", "double:e"), ("loop", "double:a")]


@pytest.mark.parametrize("graph,spec", CASES)
def test_move_map_is_homomorphism(dz2, graph, spec):
    mm = move_map(apply_move(battery()[graph], spec), *dz2)
    assert homomorphism_report(mm).passed
    if spec.startswith("contract"):
        assert contraction_report(mm).passed


def test_detach_on_fork(dz2):
    g = fork()
    res = apply_move(g, f"detach:{g.edge_ids[0]},{g.edge_ids[1]}")
    assert homomorphism_report(move_map(res, *dz2)).passed


def test_square_fails_only_for_doubling(dz2):
    seen = set()
    for name, spec, res in move_battery(max_edges=2):
        if res.kind in seen:
            continue
        seen.add(res.kind)
        ok = square_report(move_map(res, *dz2)).passed
        assert ok == (res.kind != "double"), (name, spec)


def test_contraction_with_group_algebra():
    K = group_algebra(standard_group("Z3"))
    mm = move_map(apply_move(battery()["path2"], "contract-target:e1"), K, trivial_qt(K))
    assert contraction_report(mm).passed
