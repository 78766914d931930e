import pytest
from hypothesis import given, settings, strategies as st

from hopfgauge.catalog import NAMED, battery, move_battery, path2, theta, torus
from hopfgauge.graph import (CiliatedRibbonGraph, DanglingEnd, DuplicateEnd, MovePreconditionViolated,
                             NotComposable, PathWord, apply_move, compatible_with_ciliation, compose,
                             faces, invert, is_face_path, parse_word, reduce_word, s, surface_data, t,
                             verify_regularity_witness, word)


@pytest.mark.parametrize("name,chi,genus,nf", [
    ("edge", 2, 0, 1), ("loop", 2, 0, 2), ("theta", 2, 0, 3),
    ("torus", 0, 1, 1), ("theta-torus", 0, 1, 1), ("torus3", 0, 1, 2),
])
def test_surface_data(name, chi, genus, nf):
    sd = surface_data(NAMED[name]())
    assert (sd.euler_characteristic, sd.genus, sd.boundary_count) == (chi, genus, nf)


def test_every_face_is_a_face_path():
    for g in battery().values():
        fs = faces(g)
        assert sum(len(f.path) for f in fs) == 2 * len(g.edges)
        assert all(is_face_path(g, f.path) for f in fs)


def test_rotation_preserves_faces_but_not_compatibility():
    g = theta()
    for v in g.vertices:
        h = g.rotate_cilium(v)
        assert faces(h) == faces(g)
        assert h.rotate_cilium(v, -1) == g
    assert any(compatible_with_ciliation(g, f) for f in faces(g))


def test_validation_errors():
    with pytest.raises(DanglingEnd):
        CiliatedRibbonGraph(["v"], [("a", "v", "v")], {"v": [t("a")]})
    with pytest.raises(DuplicateEnd):
        CiliatedRibbonGraph(["v"], [("a", "v", "v")], {"v": [t("a"), s("a"), t("a")]})


def test_parse_word_composition_order():
    g = path2()
    p = parse_word(g, "e2*e1")
    assert p.letters == (("e1", 1), ("e2", 1))
    assert str(p) == "e2*e1"
    with pytest.raises(NotComposable):
        parse_word(g, "e1*e2")


letters = st.lists(st.sampled_from([("a", 1), ("a", -1), ("b", 1), ("b", -1)]), max_size=8)


@given(letters, letters)
@settings(max_examples=80, deadline=None)
def test_groupoid_laws_on_torus_words(u, v):
    g = torus()
    p, q = word(g, u, "v"), word(g, v, "v")
    assert compose(invert(p), p) == PathWord.empty("v")
    assert invert(invert(p)) == p
    assert invert(compose(q, p)) == compose(invert(p), invert(q))
    assert reduce_word(p) == p


def test_move_preconditions():
    with pytest.raises(MovePreconditionViolated):
        apply_move(torus(), "contract-start:a")
    with pytest.raises(MovePreconditionViolated):
        apply_move(torus(), "frobnicate:a")


def test_move_results_are_functorial():
    results = list(move_battery(max_edges=2))
    assert {res.kind for _, _, res in results} >= {"delete", "double", "contract-start",
                                                   "contract-target", "add-loop", "detach"}
    assert all(res.check_square() for _, _, res in results)


def test_regularity_witness():
    g = path2()
    p = parse_word(g, "e2*e1")
    assert verify_regularity_witness(g, p, [], [("e1", 1), ("e2", 1)])[0]
    ok, msg = verify_regularity_witness(g, p, ["contract-start:e1"], [("e2", 1)])
    assert not ok and "not allowed" in msg
