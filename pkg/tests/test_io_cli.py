import pytest
from hypothesis import given, settings, strategies as st

from hopfgauge.catalog import battery
from hopfgauge.cli import RunReport, main, render, run
from hopfgauge.graph import DanglingEnd, surface_data
from hopfgauge.hopf import GroupTable, InvalidGroup, cyclic_group
from hopfgauge.io import (ParseError, load_graph, load_group, parse_graph, parse_group,
                          serialize_graph, serialize_group)


def test_shipped_files():
    assert load_group("z2.group").order == 2
    s3 = load_group("s3.group")
    assert s3.order == 6 and not s3.abelian
    assert surface_data(load_graph("torus.graph")).genus == 1
    assert surface_data(load_graph("theta.graph")).euler_characteristic == 2


@given(st.integers(1, 7), st.randoms(use_true_random=False))
@settings(max_examples=30, deadline=None)
def test_group_roundtrip(n, rnd):
    base = cyclic_group(n)
    perm = list(range(n))
    rnd.shuffle(perm)
    names = [f"g{perm[i]}" for i in range(n)]
    g = GroupTable(n, names, base.product)
    assert parse_group(serialize_group(g)) == g


@pytest.mark.parametrize("name", sorted(battery()))
def test_graph_roundtrip(name):
    g = battery()[name]
    assert parse_graph(serialize_graph(g)) == g


def test_parse_errors_carry_positions():
    with pytest.raises(ParseError) as exc:
        parse_group("order 2\nnames e a\ne a\na\n")
    assert (exc.value.line, exc.value.col) == (4, 1)
    with pytest.raises(ParseError) as exc:
        parse_group("order 2\nnames e a\ne a\na x\n")
    assert (exc.value.line, exc.value.col) == (4, 3)
    with pytest.raises(ParseError) as exc:
        parse_graph("vertex v: t(a) s(a)\nedge a v => v\n")
    assert exc.value.line == 2
    with pytest.raises(ParseError) as exc:
        parse_graph("vertex v: t(a) q(a)\n")
    assert (exc.value.line, exc.value.col) == (1, 16)


def test_semantic_errors():
    with pytest.raises(InvalidGroup):
        parse_group("order 2\nnames e a\ne a\na a\n")
    with pytest.raises(DanglingEnd):
        parse_graph("vertex v: t(a)\nedge a v -> v\n")


def test_comments_are_ignored():
    g = parse_graph("# a loop\nvertex v: t(a) s(a)  # cilium first\nedge a v -> v\n")
    assert g.edge_ids == ("a",)


def test_render_is_exact_and_sorted():
    from fractions import Fraction
    assert render({(1, 0): Fraction(1, 2), (0, 1): Fraction(-3)}) == "{0.1: -3/1, 1.0: 1/2}"
    rr = RunReport("x", {"b": "2", "a": "1"}, {"z": 1, "a": [True]}, {"q": True})
    assert rr.body().splitlines()[2:] == ["result.a: [true]", "result.z: 1", "check.q: pass", "status: pass"]


def test_report_is_byte_stable():
    a = run("invariant-dim", ["--group", "s3.group", "--graph", "loop.graph"])
    b = run("invariant-dim", ["--group", "s3.group", "--graph", "loop.graph"])
    assert a.body() == b.body()
    assert a.results["invariant_dim"] == 3


def test_cli_commands(capsys):
    assert main(["check-twist", "2", "--double", "z2.group"]) == 0
    assert "status: pass" in capsys.readouterr().out
    assert main(["moduli-dim", "--group", "z2.group", "--graph", "torus.graph"]) == 0
    assert "result.moduli_dim: 4" in capsys.readouterr().out
    assert main(["verify-move", "contract-target:e1", "--graph", "edge.graph", "--group", "z2.group"]) == 4
    assert main(["holonomy", "b^-1*a", "--graph", "theta.graph", "--group", "z2.group"]) == 0


def test_cli_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.group"
    bad.write_text("order 2\nnames e a\ne a\n")
    assert main(["check-hopf", "--group", str(bad)]) == 3
    assert "E_PARSE_ERROR" in capsys.readouterr().err
    assert main(["check-hopf"]) == 2
    assert main(["no-such-command"]) == 2
    assert main(["check-hopf", "--group", "missing.group"]) == 2
