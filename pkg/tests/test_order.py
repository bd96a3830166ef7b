from itertools import product as cartesian

import pytest
from hypothesis import given, strategies as st

from convspace.errors import AntisymmetryViolation, DuplicateLabel
from convspace.order import (antichain, bits, build_poset, chain, cut, enumerate_directed_subsets,
                             enumerate_monotone, is_directed, is_monotone, sup)
from conftest import posets, preorders


def diamond():
    return build_poset(["⊥", "a", "b", "⊤"], [("⊥", "a"), ("⊥", "b"), ("a", "⊤"), ("b", "⊤")])


def test_build_single_point():
    P = build_poset(["a"], [])
    assert P.n == 1 and P.le_labels("a", "a")


def test_transitive_closure():
    P = build_poset([0, 1, 2], [(0, 1), (1, 2)])
    assert P.le_labels(0, 2)
    assert not P.le_labels(2, 0)


def test_cycle_rejected_as_partial_order():
    with pytest.raises(AntisymmetryViolation):
        build_poset(["a", "b"], [("a", "b"), ("b", "a")])
    P = build_poset(["a", "b"], [("a", "b"), ("b", "a")], mode="pre")
    assert not P.partial and P.equivalence_class(0) == 0b11


def test_duplicate_label():
    with pytest.raises(DuplicateLabel):
        build_poset(["a", "a"], [])


def test_cut_examples():
    P = diamond()
    assert cut(P, P.mask(["a"])) == P.down[P.index["a"]]
    A = antichain(["a", "b"])
    assert cut(A, 0b11) == 0b11
    assert cut(P, P.mask(["a", "b"])) == P.full


def test_directed_and_sup_examples():
    A = antichain(["a", "b"])
    assert is_directed(A, 0b01)
    assert not is_directed(A, 0b11)
    assert sup(A, 0b11) is None
    P = diamond()
    assert is_directed(P, P.mask(["a", "b", "⊤"]))
    assert sup(P, P.mask(["a", "b"])) == "⊤"
    assert sup(P, P.mask(["a"])) == "a"


def test_monotone_examples():
    assert list(enumerate_monotone(build_poset([], []), chain(2))) == [()]
    assert list(enumerate_monotone(chain(2), chain(2))) == [(0, 0), (0, 1), (1, 1)]
    assert len(list(enumerate_monotone(antichain(["a", "b"]), chain(2)))) == 4


def test_directed_subset_examples():
    assert list(enumerate_directed_subsets(chain(1))) == [1]
    assert sorted(enumerate_directed_subsets(chain(2))) == [0b01, 0b10, 0b11]
    assert sorted(enumerate_directed_subsets(antichain(["a", "b"]))) == [0b01, 0b10]


@given(preorders(), st.data())
def test_cut_contains_down_set_and_is_monotone(P, data):
    S = data.draw(st.integers(0, P.full))
    T = data.draw(st.integers(0, P.full))
    assert P.down_set(S) & ~cut(P, S) == 0
    assert cut(P, S) & ~cut(P, S | T) == 0


@given(posets(), st.data())
def test_sup_is_least_upper_bound(P, data):
    S = data.draw(st.integers(0, P.full))
    s = sup(P, S)
    if s is not None:
        i = P.index[s]
        ub = P.upper_bounds(S)
        assert (ub >> i) & 1
        assert all(P.leq[i, j] for j in bits(ub))


@given(preorders(max_size=4), preorders(max_size=3))
def test_monotone_count_matches_brute_force(P, Q):
    brute = [t for t in cartesian(range(Q.n), repeat=P.n) if is_monotone(P, Q, t)]
    assert list(enumerate_monotone(P, Q)) == brute


@given(st.integers(1, 5), st.data())
def test_chain_subsets_are_directed(n, data):
    S = data.draw(st.integers(1, (1 << n) - 1))
    assert is_directed(chain(n), S)


@given(preorders())
def test_directed_subsets_brute_force(P):
    brute = [S for S in range(1, P.full + 1) if is_directed(P, S)]
    assert list(enumerate_directed_subsets(P)) == brute
