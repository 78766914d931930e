import pytest
from hypothesis import given, settings, strategies as st

from hopfgauge.catalog import NAMED, single_edge, single_loop, theta, torus
from hopfgauge.hopf import GroupTable, standard_group
from hopfgauge.oracle import (GroupConnectionSpace, TooLarge, compare_with_hopf, flat_moduli_dim,
                              invariant_dim, invariant_dim_burnside)


def _brute_force_torus_flat(G: GroupTable) -> int:
    """Commuting pairs up to simultaneous conjugation, counted independently."""
    pairs = {(a, b) for a in range(G.order) for b in range(G.order) if G.mul(a, b) == G.mul(b, a)}
    seen, n = set(), 0
    for a, b in sorted(pairs):
        if (a, b) in seen:
            continue
        n += 1
        for h in range(G.order):
            hi = G.inverse[h]
            seen.add((G.mul(G.mul(h, a), hi), G.mul(G.mul(h, b), hi)))
    return n


@pytest.mark.parametrize("group,graph,want", [
    ("S3", single_loop, 3), ("Z2", single_edge, 1), ("S3", single_edge, 1),
    ("Z3", single_loop, 3), ("Z2", torus, 4), ("S3", torus, 11),
])
def test_orbit_counts(group, graph, want):
    G = standard_group(group)
    assert invariant_dim(G, graph()) == want
    assert invariant_dim_burnside(G, graph()) == want


@pytest.mark.parametrize("group", ["Z2", "Z3", "S3"])
def test_flat_torus_matches_commuting_pairs(group):
    G = standard_group(group)
    assert flat_moduli_dim(G, torus()) == _brute_force_torus_flat(G)


def test_flat_values():
    assert flat_moduli_dim(standard_group("Z2"), torus()) == 4
    assert flat_moduli_dim(standard_group("S3"), torus()) == 8
    for name in ("Z2", "Z3", "S3"):
        assert flat_moduli_dim(standard_group(name), single_loop()) == 1
        assert flat_moduli_dim(standard_group(name), theta()) == 1


@given(st.sampled_from(sorted(NAMED)), st.sampled_from(["Z2", "Z3"]))
@settings(max_examples=12, deadline=None)
def test_burnside_agrees(name, group):
    G = standard_group(group)
    g = NAMED[name]()
    assert invariant_dim(G, g) == invariant_dim_burnside(G, g)


def test_gauge_action_is_a_group_action():
    G = standard_group("S3")
    sp = GroupConnectionSpace(G, theta())
    h1, h2, g = (1, 4), (3, 5), (2, 0, 5)
    h12 = tuple(G.mul(a, b) for a, b in zip(h1, h2))
    assert sp.act(h1, sp.act(h2, g)) == sp.act(h12, g)


def test_too_large():
    with pytest.raises(TooLarge):
        GroupConnectionSpace(standard_group("S3"), _big())


def _big():
    from hopfgauge.graph import CiliatedRibbonGraph, s, t
    edges = [(f"e{i}", "v", "v") for i in range(10)]
    order = {"v": [x for e, _, _ in edges for x in (t(e), s(e))]}
    return CiliatedRibbonGraph(["v"], edges, order)


@pytest.mark.parametrize("group,graph", [("Z2", torus), ("Z3", theta), ("S3", single_loop), ("S3", single_edge)])
def test_compare_with_hopf(group, graph):
    assert compare_with_hopf(standard_group(group), graph()).passed
