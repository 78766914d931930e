import random

import pytest

from hopfgauge.catalog import battery, lollipop, single_edge, theta, torus
from hopfgauge.exact import ONE, same_span
from hopfgauge.gauge import (build_function_algebra, cilium_move_map, module_algebra_report,
                             trace_form_determinant, verify_twist_duality, vertex_algebra,
                             well_formedness_report)
from hopfgauge.relations import cases_covered, compare_routes

SMALL = ["edge", "loop", "loop_rev", "path2", "lollipop_e", "lollipop_g_rev", "digon_anti", "torus"]


@pytest.mark.parametrize("name", SMALL)
def test_well_formed_and_module_algebra(dz2, name):
    fa = build_function_algebra(battery()[name], *dz2)
    assert well_formedness_report(fa).passed
    rng = random.Random(0)
    basis = fa.basis()
    pairs = [(rng.choice(basis), rng.choice(basis)) for _ in range(25)]
    assert module_algebra_report(fa, pairs).passed


@pytest.mark.parametrize("name", SMALL)
def test_explicit_relations_match_embedding(dz2, name):
    assert compare_routes(build_function_algebra(battery()[name], *dz2)).passed


def test_battery_covers_all_constellations():
    covered = set()
    for g in battery().values():
        covered |= cases_covered(g)
    assert len(covered) == 12


@pytest.mark.parametrize("name", ["path2", "lollipop_f", "torus"])
def test_rho_independence(dz2, name):
    g = battery()[name]
    ft = build_function_algebra(g, *dz2, rho="t")
    fs = build_function_algebra(g, *dz2, rho="s")
    assert ft.structure_constants() == fs.structure_constants()


def test_single_edge_is_dual_pairing_of_vertex_algebras(dz2):
    fa = build_function_algebra(single_edge(), *dz2)
    assert fa.dim == 4
    assert fa.unit() == {(k,): c for k, c in fa.Kd.unit.items()}


@pytest.mark.parametrize("sigma", [(0,), (1,), (0, 0), (0, 1), (1, 0), (1, 1)])
def test_vertex_algebra_twist_duality(dz2, sigma):
    va = vertex_algebra(*dz2, (0,) * len(sigma), sigma)
    assert verify_twist_duality(va).passed
    assert trace_form_determinant(va) != 0


@pytest.mark.parametrize("name", ["path2", "lollipop_e", "torus"])
def test_projector_idempotent_onto_invariants(dz2, name):
    fa = build_function_algebra(battery()[name], *dz2)
    inv = fa.invariant_basis()
    assert same_span(inv, fa.invariant_kernel_basis())
    for x in inv:
        assert fa.project(x) == x
    for x in fa.basis()[:10]:
        px = fa.project({x: ONE})
        assert fa.project(px) == px


def test_invariants_form_subalgebra(dz2):
    fa = build_function_algebra(lollipop(["te", "tf", "sf"]), *dz2)
    basis, structure = fa.invariant_algebra()
    assert len(structure) == len(basis) ** 2


@pytest.mark.parametrize("g", [theta(), torus()], ids=["theta", "torus"])
def test_cilium_rotation_keeps_invariants(fs3, g):
    K, qt = fs3
    fa = build_function_algebra(g, K, qt)
    for v in g.vertices:
        fa2, ident = cilium_move_map(fa, v)
        assert same_span(fa.invariant_basis(), fa2.invariant_basis())
        assert all(ident[x] == {x: ONE} for x in fa.basis())
