import pytest
from hypothesis import given, strategies as st

from convspace.errors import BaseExtractionIncomplete, NotDirected, OrderInconsistent
from convspace.omega import (BUNDLED, CHAIN, EMPTY, INF, Ramp, SchematicNet, SchematicSet,
                             alternating, beta, compare, constant, converges, coreflect_omega,
                             delta, example_E, extract_base, gamma, has_upper_bound, omega,
                             omega_order, omega_plus_one, order_topology_omega, ramp,
                             scott_omega_plus_one, specialization, truncate, upper_is_open_literal)
from convspace.omega.space import window
from convspace.topology import specialization as fin_specialization

OPS = ("D", "D'", "N", "N'")


def up(n, *fin):
    return SchematicSet(frozenset(fin), tail=n)


# -- schematic sets ---------------------------------------------------------------

schematic = st.builds(
    lambda fin, chain, tail: SchematicSet(frozenset(fin), frozenset(chain), tail),
    st.sets(st.sampled_from(["a", "b"])), st.sets(st.integers(0, 6)),
    st.one_of(st.none(), st.integers(0, 6)))


@given(schematic, schematic)
def test_set_algebra_matches_pointwise(A, B):
    W = 9
    pts = ["a", "b"] + list(range(W + 1))
    assert all(((p in A) or (p in B)) == (p in A | B) for p in pts)
    assert all(((p in A) and (p in B)) == (p in A & B) for p in pts)
    C = A.complement(["a", "b"])
    assert all((p in A) != (p in C) for p in pts)
    assert A.issubset(B) == all(p in B for p in pts if p in A)


@given(schematic)
def test_ramps_need_a_tail(S):
    assert ramp().eventually_in(S) == S.has_tail
    assert alternating("a").eventually_in(S) == ("a" in S and S.has_tail)


def test_order_validation():
    with pytest.raises(OrderInconsistent):
        omega_order(["x"], below={"x": SchematicSet.of([3])}, above={"x": SchematicSet.of([1])})


# -- bundled spaces -----------------------------------------------------------------

def test_basic_openness():
    assert not beta().is_open(SchematicSet.of([INF]))
    assert beta().is_open(up(3)) and beta().is_open(up(3, INF))
    assert gamma().is_open(up(5, INF))
    assert not gamma().is_open(up(5))
    E = example_E()
    assert not E.is_open(SchematicSet.of([INF, "a"]))
    for U in (SchematicSet.of([INF]), up(2), up(2, INF), up(2, INF, "a"), SchematicSet(frozenset({INF, "a", "⊥"}), tail=0)):
        assert E.is_open(U)
    assert not E.is_open(up(2, "a"))


def test_convergence_examples():
    assert converges(beta(), CHAIN, INF)
    assert converges(delta(), CHAIN, INF)
    assert converges(example_E(), alternating("a"), "a")
    assert not converges(beta(), constant(4), INF)
    with pytest.raises(NotDirected):
        converges(beta(), SchematicSet.of([INF, 0]), INF)


def test_coreflection_examples():
    B = beta()
    assert compare(coreflect_omega(B, "D"), B)[0] == "equal"
    assert coreflect_omega(B, "D'").is_open(SchematicSet.of([INF]))
    R = coreflect_omega(delta(), "D")
    assert R.is_open(SchematicSet.of([INF])) and R.is_open(SchematicSet.of([3]))
    assert compare(R, delta()) == ("finer", SchematicSet.of([INF]))


def test_order_topology_examples():
    top = omega_plus_one()
    assert compare(order_topology_omega(top, "scott"), order_topology_omega(top, "weak_scott"))[0] == "equal"
    rel, witness = compare(order_topology_omega(top, "alexandroff"), order_topology_omega(top, "scott"))
    assert rel == "finer" and witness == SchematicSet.of([INF])
    w = omega()
    assert compare(order_topology_omega(w, "alexandroff"), order_topology_omega(w, "scott"))[0] == "equal"


def test_compare_examples():
    assert compare(gamma(), beta())[0] == "coarser"
    assert compare(beta(), gamma())[0] == "finer"


def test_truncation_examples():
    T = truncate(beta(), 2)
    assert T.ground == (INF, 0, 1, 2)
    P = fin_specialization(T)
    assert P.le_labels(0, 1) and P.le_labels(1, 2) and not P.le_labels(2, INF)
    # up(3) ∪ {∞} meets the truncated ground in {∞}, so the subspace has it open
    assert T.is_open(T.mask([INF]))
    S = truncate(gamma(), 0)
    assert S.n == 2 and fin_specialization(S).pairs() == [(0, INF)]
    with pytest.raises(ValueError):
        truncate(beta(), -1)


def test_upper_bounds():
    assert not has_upper_bound(omega(), CHAIN)
    assert has_upper_bound(omega_plus_one(), CHAIN)
    assert has_upper_bound(omega(), SchematicSet.of([0, 3]))


@pytest.mark.parametrize("name", sorted(BUNDLED))
@pytest.mark.parametrize("which", OPS)
def test_coreflection_is_sound_and_idempotent(name, which):
    X = BUNDLED[name]()
    R = coreflect_omega(X, which)
    W = window(X)
    assert compare(R, X)[0] in ("equal", "finer")
    for x in X.points(W):
        for U in X.nbhds(x, W):
            assert R.is_open(U)
            assert R.order.is_up_set(U) or not X.order_compatible
        # the chain is a directed set only when the specialization orders it
        if R.order.chain_ordered and X.chain_converges_to(x, W) and which in ("D", "N"):
            assert R.chain_converges_to(x, W)
    assert compare(coreflect_omega(R, which), R)[0] == "equal"


@pytest.mark.parametrize("name", sorted(BUNDLED))
def test_base_extraction(name):
    for which in ("D", "D'"):
        R = coreflect_omega(BUNDLED[name](), which)
        base = extract_base(R)
        assert compare(base, R)[0] == "equal"


@pytest.mark.parametrize("name", sorted(BUNDLED))
@pytest.mark.parametrize("n", [0, 1, 3, 6])
def test_truncation_consistency(name, n):
    X = BUNDLED[name]()
    T = truncate(X, n)
    W = window(X, n)
    for x in X.points(W):
        for U in X.nbhds(x, W):
            assert T.is_open(T.mask(p for p in U.points(n)))


@pytest.mark.parametrize("name", [n for n in sorted(BUNDLED) if BUNDLED[n]().order_compatible])
def test_order_topologies_sandwich_directed_topology(name):
    X = BUNDLED[name]()
    order = specialization(X)
    upper = order_topology_omega(order, "upper")
    weak = order_topology_omega(order, "weak_scott")
    alex = order_topology_omega(order, "alexandroff")
    D = coreflect_omega(X, "D")
    assert compare(weak, upper)[0] in ("equal", "finer")
    assert compare(D, weak)[0] in ("equal", "finer")
    assert compare(alex, D)[0] in ("equal", "finer")


@pytest.mark.parametrize("order", [omega(), omega_plus_one(), specialization(example_E()),
                                   specialization(beta())])
def test_upper_topology_matches_definition(order):
    T = order_topology_omega(order, "upper")
    fins = list(order.fin_labels)
    candidates = []
    for mask in range(1 << len(fins)):
        fin = [f for k, f in enumerate(fins) if mask >> k & 1]
        for t in (None, 0, 2, 4):
            for extra in ((), (1,), (0, 3)):
                candidates.append(SchematicSet.of(fin + list(extra), t))
    for U in candidates:
        U = order.up_set(U)
        assert T.is_open(U) == upper_is_open_literal(order, U)


def test_scott_omega_plus_one_matches_bundled():
    assert compare(scott_omega_plus_one(), order_topology_omega(omega_plus_one(), "scott"))[0] == "equal"


def test_net_description():
    assert SchematicNet(("a", Ramp(2, 1))).describe() == "(a, 2n+1)"
    assert SchematicNet(("a", Ramp(2, 1))).at(3) == 3
