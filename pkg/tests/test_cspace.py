import pytest
from hypothesis import given, strategies as st

from convspace.convergence import coreflect, tail
from convspace.cspace import (SClassQuery, battery, eventual_lower_bounds, in_s_class, is_c_space,
                              s_class_topological, s_topology)
from convspace.omega import (BUNDLED, CHAIN, INF, SchematicSet, alternating, beta, compare,
                             constant, converges, coreflect_omega, example_E, ramp,
                             scott_omega_plus_one, specialization)
from convspace.omega.space import window
from convspace.topology import spaces_up_to
from conftest import spaces


def test_c_space_examples():
    assert is_c_space(scott_omega_plus_one())
    v = is_c_space(example_E())
    assert not v and v.point == "a"
    assert "a" in v.neighbourhood and INF in v.neighbourhood


def test_finite_t0_spaces_are_continuous():
    for X in spaces_up_to(4):
        assert is_c_space(X)
        assert s_class_topological(X).status == "topological"


def test_eventual_lower_bound_examples():
    X = spaces_up_to(3)[-1]
    P = X.specialization()
    for x in range(X.n):
        assert eventual_lower_bounds(X, tail(1 << x)) == P.down[x]
    assert eventual_lower_bounds(beta(), ramp()) == CHAIN
    # ⊥ lies below a and below every chain point in E
    assert eventual_lower_bounds(example_E(), alternating("a")) == SchematicSet.of(["⊥"])


def test_s_class_examples():
    assert in_s_class(beta(), ramp(), INF)
    assert in_s_class(beta(), constant(3), 3)
    E = example_E()
    assert converges(E, alternating("a"), "a")
    assert not in_s_class(E, alternating("a"), "a")


def test_refutation_with_explicit_witness():
    E = example_E()
    v = s_class_topological(E, [SClassQuery(E, alternating("a"), "a")])
    assert v.status == "refuted" and v.witness.point == "a"
    assert s_class_topological(E).status == "refuted"
    assert s_class_topological(scott_omega_plus_one()).status == "topological"


@pytest.mark.parametrize("name", sorted(BUNDLED))
def test_s_topology_is_directed_coreflection(name):
    X = BUNDLED[name]()
    assert compare(s_topology(X), coreflect_omega(X, "D"))[0] == "equal"


def test_s_topology_on_finite_spaces():
    for X in spaces_up_to(4):
        assert s_topology(X) == coreflect(X, "D")


@pytest.mark.parametrize("name", sorted(BUNDLED))
def test_battery_on_continuous_spaces(name):
    X = BUNDLED[name]()
    if not is_c_space(X):
        return
    W = window(X)
    for net in battery(X):
        for x in X.points(W):
            assert converges(X, net, x) == in_s_class(X, net, x)


@pytest.mark.parametrize("name", sorted(BUNDLED))
def test_eventual_lower_bounds_are_down_sets(name):
    X = BUNDLED[name]()
    spec = specialization(X)
    for net in battery(X):
        assert spec.is_down_set(eventual_lower_bounds(X, net))


@given(spaces(max_size=4), st.data())
def test_finite_eventual_lower_bounds_are_down_sets(X, data):
    S = data.draw(st.integers(1, X.full))
    EL = eventual_lower_bounds(X, tail(S))
    assert X.specialization().down_set(EL) == EL
