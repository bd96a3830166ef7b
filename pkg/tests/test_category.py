from itertools import product as cartesian

import numpy as np
import pytest
from hypothesis import given, strategies as st

from convspace.category import (check_coreflection_universal, check_exponential_law,
                                check_product_universal, check_separate_continuity,
                                check_specialization_orders, check_T0_preservation,
                                example_dif_facts, exponential, generating_space, hom_set,
                                pointwise_order, pointwise_space, probe_generated, tensor)
from convspace.convergence import coreflect
from convspace.errors import LawViolation, SizeCap
from convspace.order import chain, enumerate_monotone
from convspace.topology import (FiniteTopology, discrete, from_preorder, homeomorphic, is_finer,
                                one_point, product, sierpinski, spaces_up_to, specialization)
from conftest import posets, spaces

S = sierpinski()


def test_hom_set_examples():
    Y = from_preorder(chain(3))
    assert len(hom_set(one_point(), Y)) == Y.n
    assert len(hom_set(S, S)) == 3
    assert len(hom_set(discrete("ab"), Y)) == Y.n ** 2
    with pytest.raises(SizeCap):
        hom_set(discrete(range(13)), one_point())


def test_pointwise_examples():
    assert pointwise_space(S, one_point()).n == 1
    P = pointwise_space(S, S)
    assert P.ground == (("⊥", "⊥"), ("⊥", "⊤"), ("⊤", "⊤"))
    assert homeomorphic(P, from_preorder(chain(3)))


def test_tensor_and_exponential_examples():
    assert homeomorphic(tensor(S, one_point()), S)
    assert homeomorphic(exponential(one_point(), S), S)
    assert homeomorphic(exponential(S, S, "D"), from_preorder(chain(3)))


@given(spaces(max_size=2), spaces(max_size=2), st.sampled_from(["D", "D'"]))
def test_finite_tensor_is_product(X, Y, which):
    assert tensor(X, Y, which) == product(X, Y)


@given(spaces(max_size=3), spaces(max_size=3), st.sampled_from(["D", "D'"]))
def test_refinements_are_finer(X, Y, which):
    assert is_finer(tensor(X, Y, which), product(X, Y))
    assert is_finer(exponential(X, Y, which, 64), pointwise_space(X, Y, 64))


@given(posets(max_size=3), posets(max_size=3))
def test_alexandroff_exponential_is_monotone_maps(P, Q):
    X, Y = from_preorder(P), from_preorder(Q)
    E = exponential(X, Y, "D", 64)
    assert exponential(X, Y, "D'", 64) == E
    maps = list(enumerate_monotone(P, Q))
    assert [tuple(Y.ground[v] for v in f) for f in maps] == list(E.ground)
    leq = pointwise_order(X, Y, maps)
    assert np.array_equal(specialization(E).leq, leq)
    assert E == from_preorder(specialization(E))


@given(spaces(max_size=3), spaces(max_size=3))
def test_specialization_orders(X, Y):
    for which in ("D", "D'"):
        assert check_specialization_orders(X, Y, which, 64).passed
        assert check_T0_preservation(X, Y, which, 64).passed


def test_t0_examples():
    assert check_T0_preservation(S, S).passed
    assert check_T0_preservation(discrete("ab"), discrete("xy")).passed


@pytest.mark.parametrize("which", ["D", "D'"])
def test_exponential_law_exhaustive_small(which):
    small = spaces_up_to(2)
    for X, Y, Z in cartesian(small, small, small):
        rep = check_exponential_law(X, Y, Z, which)
        assert rep.passed and rep.instances > 0


@given(spaces(max_size=3), spaces(max_size=3))
def test_exponential_law_with_point_source(X, Y):
    rep = check_exponential_law(X, Y, one_point(), max_size=64)
    assert rep.passed
    assert len(hom_set(X, Y)) == exponential(X, Y, max_size=64).n


@given(spaces(max_size=2), spaces(max_size=2))
def test_product_universal(X, Y):
    assert check_product_universal(X, Y, "D", spaces_up_to(3)).passed


@pytest.mark.parametrize("which", ["D", "D'", "I", "N"])
def test_coreflection_universal(which):
    small = spaces_up_to(3)
    for Y in small:
        assert check_coreflection_universal(Y, which, small).passed
        assert coreflect(Y, which) == Y


def test_separate_continuity():
    small = spaces_up_to(2)
    for X, Y, Z in cartesian(small, small, small):
        assert check_separate_continuity(X, Y, Z).passed


def test_violation_raises():
    from convspace.category import LawReport, _finish
    rep = LawReport("demo")
    rep.fail("boom")
    with pytest.raises(LawViolation):
        _finish(rep, True)
    assert not _finish(rep, False).passed


def test_generating_spaces():
    B = generating_space(chain(2), "beta")
    G = generating_space(chain(2), "gamma")
    inf = B.n - 1
    assert not B.is_open(1 << inf) and not G.is_open(1 << inf)
    assert is_finer(B, G)
    with pytest.raises(ValueError):
        generating_space(chain(2), "delta")


@pytest.mark.parametrize("which", ["D", "D'"])
def test_probes_match_coreflection(which):
    for X in spaces_up_to(3):
        assert probe_generated(X, which, 3) == coreflect(X, which)


def test_point_probes_give_discrete():
    for X in spaces_up_to(3):
        assert probe_generated(X, "D", 0) == discrete(X.ground)


def test_pointwise_limit_facts():
    rep = example_dif_facts()
    assert rep.passed and rep.instances > 0
