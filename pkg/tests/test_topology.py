from itertools import product as cartesian

import numpy as np
import pytest
from hypothesis import given, strategies as st

from convspace.errors import NotATopology, SizeCap
from convspace.order import build_poset, chain, is_monotone
from convspace.topology import (canonical_form, continuous, continuous_by_opens, discrete,
                                enumerate_topologies, enumerate_topologies_brute, final_topology,
                                final_topology_by_subsets, from_preorder, homeomorphic, indiscrete,
                                is_finer, make_topology, one_point, order_topology, product,
                                sierpinski, specialization)
from conftest import posets, preorders, spaces


def test_make_topology_examples():
    make_topology(["x"], [[], ["x"]])
    S = make_topology(["⊥", "⊤"], [[], ["⊤"], ["⊥", "⊤"]])
    assert S == sierpinski()
    with pytest.raises(NotATopology):
        make_topology(["a", "b"], [[], ["a"], ["b"]])


def test_completion_and_cap():
    T = make_topology(["a", "b"], [["a"], ["b"]], complete=True)
    assert T == discrete(["a", "b"])
    with pytest.raises(SizeCap):
        make_topology(range(13), [[]], complete=True)


def test_specialization_examples():
    S = specialization(sierpinski())
    assert S.pairs() == [("⊥", "⊤")]
    assert specialization(discrete("ab")).pairs() == []
    I = specialization(indiscrete("ab"))
    assert not I.partial and set(I.pairs()) == {("a", "b"), ("b", "a")}


def test_order_topology_chain():
    T = order_topology(chain(2), "alexandroff")
    assert T.opens() == [0b00, 0b10, 0b11]


def test_t0_counts():
    assert [len(enumerate_topologies(n, t0=True)) for n in range(1, 5)] == [1, 2, 5, 16]
    assert [len(enumerate_topologies(n)) for n in range(1, 4)] == [1, 3, 9]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_enumeration_matches_brute_force(n):
    fast = {T.nbhd for T in enumerate_topologies(n, up_to_iso=False)}
    slow = {T.nbhd for T in enumerate_topologies_brute(n)}
    assert fast == slow


@given(posets())
def test_order_topologies_agree_on_finite_posets(P):
    A = order_topology(P, "alexandroff")
    assert order_topology(P, "scott") == A
    assert order_topology(P, "upper") == A
    assert specialization(A) == P


@given(posets())
def test_upper_scott_alexandroff_are_nested(P):
    up, sc, al = (order_topology(P, k) for k in ("upper", "scott", "alexandroff"))
    assert is_finer(sc, up) and is_finer(al, sc)


def test_continuity_examples():
    X = sierpinski()
    assert continuous((0, 0), X, X) and continuous((0, 1), X, X)
    assert not continuous((1, 0), X, X)


@given(posets(max_size=3), posets(max_size=3))
def test_alexandroff_continuity_is_monotonicity(P, Q):
    X, Y = from_preorder(P), from_preorder(Q)
    for f in cartesian(range(Y.n), repeat=X.n):
        assert continuous(f, X, Y) == is_monotone(P, Q, f) == continuous_by_opens(f, X, Y)


def test_product_examples():
    S = sierpinski()
    assert homeomorphic(product(S, one_point()), S)
    SS = product(S, S)
    assert SS.n == 4
    P = specialization(SS)
    assert P.le_labels(("⊥", "⊥"), ("⊤", "⊤")) and not P.le_labels(("⊥", "⊤"), ("⊤", "⊥"))
    D = product(discrete("ab"), discrete("xy"))
    assert D == discrete(D.ground)


@given(spaces(max_size=3), spaces(max_size=3))
def test_product_specialization_is_componentwise(X, Y):
    P, Q, R = specialization(X), specialization(Y), specialization(product(X, Y))
    for i in range(X.n):
        for j in range(Y.n):
            for k in range(X.n):
                for m in range(Y.n):
                    assert R.leq[i * Y.n + j, k * Y.n + m] == (P.leq[i, k] and Q.leq[j, m])


def test_final_topology_examples():
    assert final_topology("ab", []) == discrete("ab")
    X = sierpinski()
    assert final_topology(X.ground, [(X, (0, 1))]) == X


@given(spaces(max_size=3), spaces(max_size=3), st.data())
def test_final_topology_is_finest(S, X, data):
    maps = [f for f in cartesian(range(X.n), repeat=S.n) if continuous(f, S, X)]
    chosen = data.draw(st.lists(st.sampled_from(maps), max_size=3))
    probes = [(S, f) for f in chosen]
    F = final_topology(X.ground, probes)
    assert F == final_topology_by_subsets(X.ground, probes)
    assert all(continuous(f, S, F) for f in chosen)
    # any topology making the probes continuous is coarser
    for T in enumerate_topologies(X.n, up_to_iso=False):
        if all(continuous(f, S, T) for f in chosen):
            assert is_finer(F, T)


@given(spaces(max_size=4, t0=False))
def test_canonical_form_is_invariant(T):
    perm = list(reversed(range(T.n)))
    nb = [0] * T.n
    for i in range(T.n):
        nb[perm[i]] = sum(1 << perm[j] for j in range(T.n) if (T.nbhd[i] >> j) & 1)
    from convspace.topology import FiniteTopology
    U = FiniteTopology(T.ground, tuple(nb))
    assert canonical_form(U) == canonical_form(T)
    assert homeomorphic(U, T)
