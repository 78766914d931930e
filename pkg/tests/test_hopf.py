import pytest
from hypothesis import given, settings, strategies as st

from hopfgauge.exact import ONE
from hopfgauge.hopf import (InvalidGroup, GroupTable, drinfeld_double, drinfeld_element, dual,
                            function_algebra, group_algebra, haar_integral, haar_solution_space,
                            is_factorisable, ribbon_data, standard_group, trivial_qt,
                            verify_hopf_axioms, verify_quasitriangular, verify_r_properties,
                            verify_ribbon, verify_twist)

GROUPS = ["Z2", "Z3", "S3"]


def test_group_tables():
    assert standard_group("Z2").abelian
    s3 = standard_group("S3")
    assert s3.order == 6 and not s3.abelian
    for g in range(6):
        assert s3.mul(g, s3.inverse[g]) == s3.identity


def test_invalid_groups():
    with pytest.raises(InvalidGroup):
        GroupTable(2, ["e", "a"], [[0, 1], [1, 1]])
    with pytest.raises(InvalidGroup):
        GroupTable(2, ["e", "e"], [[0, 1], [1, 0]])
    # a loop that is not associative
    t = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(InvalidGroup):
        GroupTable(5, list("eabcd"), t)


@pytest.mark.parametrize("name", GROUPS)
def test_axioms(name):
    G = standard_group(name)
    for K in (group_algebra(G), function_algebra(G), drinfeld_double(group_algebra(G))[0]):
        assert verify_hopf_axioms(K).passed, K.name


def test_dual_of_group_algebra_is_function_algebra():
    G = standard_group("S3")
    assert dual(group_algebra(G)).m == function_algebra(G).m


@pytest.mark.parametrize("name", ["Z2", "Z3"])
def test_double_is_quasitriangular_and_factorisable(name):
    K, qt = drinfeld_double(group_algebra(standard_group(name)))
    assert verify_quasitriangular(K, qt).passed
    assert verify_r_properties(K, qt).passed
    assert is_factorisable(K, qt)


def test_trivial_r_is_not_factorisable():
    K = group_algebra(standard_group("Z2"))
    assert verify_quasitriangular(K, trivial_qt(K)).passed
    assert not is_factorisable(K, trivial_qt(K))


@pytest.mark.parametrize("name", GROUPS)
def test_haar_integral_is_unique_and_normalised(name):
    K = group_algebra(standard_group(name))
    assert len(haar_solution_space(K)) == 1
    ell = haar_integral(K)
    assert sum(c * K.counit[i] for i, c in ell.items()) == 1
    assert all(c == ONE / K.dim for c in ell.values())


def test_ribbon_of_double_z3(dz2):
    K, qt = drinfeld_double(group_algebra(standard_group("Z3")))
    rd = ribbon_data(K, qt)
    assert rd.grouplike_g == K.unit
    assert verify_ribbon(K, qt, rd).passed
    assert drinfeld_element(K, qt)


@pytest.mark.parametrize("n", [2, 3])
def test_twist_cocycle(dz2, n):
    assert verify_twist(*dz2, n).passed


@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
@settings(max_examples=40, deadline=None)
def test_double_antipode_is_antimultiplicative(a, b, c):
    K, _ = drinfeld_double(group_algebra(standard_group("Z2")))
    x, y = {a: ONE}, {b: ONE, c: 2 * ONE}
    assert K.antipode(K.mul(x, y)) == K.mul(K.antipode(y), K.antipode(x))
