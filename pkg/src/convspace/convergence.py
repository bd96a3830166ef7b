"""Convergence classes on finite spaces and the topologies they determine.

On a finite set every filter is principal, so a net is described by the set
of values it keeps taking: it is eventually in ``U`` iff that set lies in
``U``.  Directed subsets are nets indexed by themselves; their eventual set is
the class of members sitting above all other members.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import HypothesisViolated, NotDirected
from .order import FinitePoset, bits, cut, enumerate_directed_subsets, is_chain, is_directed, top_class
from .topology import FiniteTopology, from_edges, specialization

OPERATORS = ("D", "D'", "I", "I'", "N", "N'")
ALL_CLASSES = OPERATORS + ("1", "S")


@dataclass(frozen=True)
class FiniteNet:
    kind: str  # "tail" or "directed"
    members: int

    def __post_init__(self):
        if self.kind not in ("tail", "directed"):
            raise ValueError(f"unknown net kind {self.kind!r}")
        if self.members == 0:
            raise ValueError("a net needs at least one value")


def tail(mask: int) -> FiniteNet:
    return FiniteNet("tail", mask)


def directed(mask: int) -> FiniteNet:
    return FiniteNet("directed", mask)


def eventual_set(order: FinitePoset, net: FiniteNet) -> int:
    if net.kind == "tail":
        return net.members
    top = top_class(order, net.members)
    if top == 0:
        raise NotDirected("set has no element above all its members")
    return top


def eventually_in(order: FinitePoset, net: FiniteNet, U: int) -> bool:
    return eventual_set(order, net) & ~U == 0


def converges(X: FiniteTopology, net: FiniteNet, x: int, order: FinitePoset | None = None) -> bool:
    """Whether ``net`` converges to the point index ``x`` in ``X``."""
    U = X.nbhd[x]  # every open nbhd contains this one
    if net.kind == "tail":
        return net.members & ~U == 0
    order = order or specialization(X)
    D = net.members
    if not is_directed(order, D):
        raise NotDirected("directed net over a non-directed set")
    return any(order.up[d] & D & ~U == 0 for d in bits(D))


@dataclass(frozen=True)
class ConvergenceClass:
    pairs: tuple

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)

    def __contains__(self, pair):
        return pair in set(self.pairs)


def _same_class_subsets(order: FinitePoset, singletons_only: bool) -> Iterator[int]:
    """Nonempty subsets of a single equivalence class of the preorder."""
    seen = set()
    for i in range(order.n):
        cls = order.equivalence_class(i)
        if cls in seen:
            continue
        seen.add(cls)
        if singletons_only:
            for j in bits(cls):
                yield 1 << j
            continue
        sub = cls
        while sub:
            yield sub
            sub = (sub - 1) & cls


def _candidate_nets(X: FiniteTopology, order: FinitePoset, which: str, reduced: bool) -> Iterator[FiniteNet]:
    if which in ("1", "S"):
        for i in range(X.n):
            yield tail(1 << i)
        return
    if which in ("N", "N'"):
        # a monotone sequence in a finite preorder ends up cycling through
        # a nonempty subset of one equivalence class
        for S in _same_class_subsets(order, reduced):
            yield tail(S)
        return
    if reduced:
        for S in _same_class_subsets(order, True):
            yield directed(S)
        return
    for D in enumerate_directed_subsets(order):
        if which in ("I", "I'") and not is_chain(order, D):
            continue
        yield directed(D)


def class_contains(X: FiniteTopology, which: str, net: FiniteNet, x: int,
                   order: FinitePoset | None = None) -> bool:
    """Membership of ``(net, x)`` in the named class of ``X``."""
    order = order or specialization(X)
    if which == "1":
        return net.kind == "tail" and net.members == 1 << x
    if which == "S":
        return net.kind == "tail" and len(list(bits(net.members))) == 1 and bool(order.up[x] & net.members)
    if which in ("N", "N'"):
        if net.kind != "tail":
            return False
        S = net.members
        first = next(bits(S))
        if S & ~order.equivalence_class(first):
            return False
        values = S
    else:
        if net.kind != "directed" or not is_directed(order, net.members):
            return False
        if which in ("I", "I'") and not is_chain(order, net.members):
            return False
        values = net.members
    conv = converges(X, net, x, order)
    if which in ("D", "I", "N"):
        return conv
    below_some = bool(order.down_set(values) >> x & 1)
    all_below = values & ~order.down[x] == 0
    return below_some or (conv and all_below)


def op_class(X: FiniteTopology, which: str, reduced: bool = False) -> ConvergenceClass:
    """The class of ``X`` named by ``which`` (one of D D' I I' N N' 1 S).

    With ``reduced=True`` only nets whose values lie in one equivalence class
    (singletons for directed sets) are listed.  Every listed constraint of the
    full class is a conjunction of constraints from the reduced one, so both
    determine the same topology; the test-suite checks this.
    """
    if which not in ALL_CLASSES:
        raise ValueError(f"unknown class {which!r}")
    order = specialization(X)
    pairs = []
    for net in _candidate_nets(X, order, which, reduced):
        for x in range(X.n):
            if class_contains(X, which, net, x, order):
                pairs.append((net, x))
    return ConvergenceClass(tuple(pairs))


def _class_order(X_ground, cls: ConvergenceClass, order: FinitePoset | None):
    if order is not None:
        return order
    if any(net.kind == "directed" for net, _ in cls):
        raise ValueError("directed nets need an ambient order")
    return None


def determined_topology(X_ground, cls: Iterable, order: FinitePoset | None = None) -> FiniteTopology:
    """Opens are the sets ``U`` with: ``x in U`` implies the net is eventually in ``U``.

    Each pair contributes the edges ``x -> e`` for ``e`` in the net's eventual
    set; opens are exactly the edge-closed sets.
    """
    cls = cls if isinstance(cls, ConvergenceClass) else ConvergenceClass(tuple(cls))
    ground = tuple(X_ground)
    order = _class_order(ground, cls, order)
    succ = [0] * len(ground)
    for net, x in cls:
        succ[x] |= eventual_set(order, net) if net.kind == "directed" else net.members
    return from_edges(ground, succ)


def determined_topology_brute(X_ground, cls: Iterable, order: FinitePoset | None = None) -> list[int]:
    """Open family by direct filtering of all subsets (oracle for small grounds)."""
    cls = list(cls)
    n = len(tuple(X_ground))
    opens = []
    for U in range(1 << n):
        if all(not (U >> x) & 1 or eventually_in(order, net, U) for net, x in cls):
            opens.append(U)
    return opens


def coreflect(X: FiniteTopology, which: str) -> FiniteTopology:
    """Topology determined by the named class of ``X``."""
    order = specialization(X)
    return determined_topology(X.ground, op_class(X, which, reduced=True), order)


def is_determined(X: FiniteTopology, which: str) -> bool:
    return coreflect(X, which).nbhd == X.nbhd


def image(net: FiniteNet, f) -> FiniteNet:
    m = 0
    for i in bits(net.members):
        m |= 1 << f[i]
    return FiniteNet(net.kind, m)


def check_sandwich(P: FinitePoset, cls: Iterable) -> None:
    """Raise unless the class lies between the principal pairs and the cut bound."""
    cls = list(cls)
    present = set()
    for net, x in cls:
        if net.kind != "directed" or not is_directed(P, net.members):
            raise HypothesisViolated(f"pair with a non-directed net at {P.elements[x]!r}")
        if not (cut(P, net.members) >> x) & 1:
            raise HypothesisViolated(f"{P.elements[x]!r} is outside the cut of {P.labels(net.members)}")
        if net.members & (net.members - 1) == 0:
            present.add((net.members, x))
    for x in range(P.n):
        for y in bits(P.up[x]):
            if (1 << y, x) not in present:
                raise HypothesisViolated(
                    f"missing principal pair ({{{P.elements[y]!r}}}, {P.elements[x]!r})")


def closure_transfinite(P: FinitePoset, cls: Iterable, F: int, check: bool = True) -> tuple[list[int], int]:
    """Stages of the iterated limit-point operator starting from ``F``.

    Stage ``k+1`` collects the limits of class nets whose values all lie in the
    union of the earlier stages.  Stages grow, so the iteration stops after at
    most ``|P|`` steps; the last stage is returned as the star set.
    """
    cls = list(cls)
    if check:
        check_sandwich(P, cls)
    stages = [F]
    union = F
    while True:
        nxt = 0
        for net, x in cls:
            if net.members & ~union == 0:
                nxt |= 1 << x
        stages.append(nxt)
        new_union = union | nxt
        if new_union == union:
            return stages, union
        union = new_union
