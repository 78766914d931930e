import pytest
from hypothesis import given, settings, strategies as st

from hopfgauge.catalog import battery, single_edge, single_loop, theta, theta_torus, torus
from hopfgauge.exact import ONE, vscale
from hopfgauge.gauge import build_function_algebra
from hopfgauge.graph import PathWord, compose, faces, invert, parse_word, word
from hopfgauge.hopf import drinfeld_double, group_algebra, standard_group, trivial_qt
from hopfgauge.holonomy import (GraphAssumptionViolated, character_algebra_basis, curvature,
                                face_projector, flatness_check, functor_law_holds, holonomy,
                                holonomy_commutation_report, moduli_algebra,
                                moduli_assumption_violations)


def test_single_edge_holonomy_is_the_generator(dz2):
    fa = build_function_algebra(single_edge(), *dz2)
    hp = holonomy(fa, parse_word(fa.graph, "e"))
    for a in range(fa.d):
        assert hp.cols[a] == fa.generator("e", {a: ONE})


@pytest.mark.parametrize("name", ["edge", "path2", "lollipop_e", "digon"])
def test_inverse_cancels(dz2, name):
    fa = build_function_algebra(battery()[name], *dz2)
    for e in fa.edges:
        p = word(fa.graph, [(e, 1)])
        for q in (PathWord((p.letters[0], (e, -1)), p.start, p.start),
                  PathWord(((e, -1), p.letters[0]), p.target, p.target)):
            cols = holonomy(fa, q).cols
            for a in range(fa.d):
                assert cols[a] == vscale(fa.unit(), fa.Kd.counit[a])
        assert functor_law_holds(fa, p, invert(p))


steps = st.sampled_from([("a", 1), ("a", -1), ("b", 1), ("b", -1)])


@given(st.lists(steps, min_size=3, max_size=3), st.integers(1, 2))
@settings(max_examples=15, deadline=None)
def test_functor_law_on_torus(dz2, letters, cut):
    fa = build_function_algebra(torus(), *dz2)
    p = PathWord(tuple(letters[:cut]), "v", "v")
    q = PathWord(tuple(letters[cut:]), "v", "v")
    assert functor_law_holds(fa, p, q)


@pytest.mark.parametrize("name", ["loop", "loop_rev"])
def test_single_loop_relations(dz2, name):
    fa = build_function_algebra(battery()[name], *dz2)
    assert holonomy_commutation_report(fa, parse_word(fa.graph, "a")).passed


def test_path_covariance(dz2):
    fa = build_function_algebra(battery()["path2"], *dz2)
    rep = holonomy_commutation_report(fa, parse_word(fa.graph, "e2*e1"))
    assert rep.passed and "gauge covariance" in rep.status()


def test_flatness_of_trivial_connection(dz2):
    fa = build_function_algebra(theta(), *dz2)
    one = {(): ONE}
    for _ in fa.edges:
        one = {t + (k,): c * ck for t, c in one.items() for k, ck in fa.K.unit.items()}
    for f in faces(fa.graph):
        assert flatness_check(fa, one, f)


@pytest.mark.parametrize("g", [torus(), theta(), theta_torus()], ids=["torus", "theta", "theta_torus"])
def test_face_projector_kills_curvature(dz2, g):
    fa = build_function_algebra(g, *dz2)
    for f in faces(g):
        P = face_projector(fa, f, on="invariants")
        one = P(fa.unit())
        assert P(one) == one
        for alpha in character_algebra_basis(fa.K):
            eps = sum(c * fa.Kd.counit[a] for a, c in alpha.items())
            assert P(fa.project(curvature(fa, f)(alpha))) == vscale(one, eps)


@pytest.mark.parametrize("group,graph,dim", [
    ("Z2", torus, 4), ("Z3", torus, 9), ("Z2", single_loop, 1), ("S3", single_loop, 1),
    ("Z2", theta, 1), ("Z2", theta_torus, 4),
])
def test_moduli_dimensions(group, graph, dim):
    K = group_algebra(standard_group(group))
    m = moduli_algebra(build_function_algebra(graph(), K, trivial_qt(K)))
    assert m.dim == dim and m.report.passed


def test_moduli_strict_mode():
    K = group_algebra(standard_group("Z2"))
    assert moduli_assumption_violations(torus())
    with pytest.raises(GraphAssumptionViolated):
        moduli_algebra(build_function_algebra(torus(), K, trivial_qt(K)), strict=True)


def test_double_torus_presentations_agree():
    K, qt = drinfeld_double(group_algebra(standard_group("Z2")))
    dims = {moduli_algebra(build_function_algebra(g(), K, qt)).dim for g in (torus, theta_torus)}
    assert len(dims) == 1


def test_composition_reduces():
    g = torus()
    p = parse_word(g, "a")
    assert compose(invert(p), p) == PathWord.empty("v")
