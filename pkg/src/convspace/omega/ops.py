"""Decision procedures on ω-presented spaces."""

from __future__ import annotations

from ..errors import BaseExtractionIncomplete, NotDirected, NotT0, Unsupported
from ..order import build_poset
from ..topology import FiniteTopology, nbhds_from_family
from .order import OmegaOrder
from .sets import CHAIN, EMPTY, Point, SchematicNet, SchematicSet, is_chain_point
from .space import CriticalTopology, Handle, OmegaSpace, SchemaTemplate, window

OMEGA_OPERATORS = ("D", "D'", "I", "I'", "N", "N'")


def is_open(X: Handle, U: SchematicSet) -> bool:
    return X.is_open(U)


def _window_set(pred, fin_labels, W: int) -> SchematicSet:
    """Schematic set of points satisfying ``pred``; chain point ``W`` stands for the tail."""
    fin = frozenset(f for f in fin_labels if pred(f))
    hits = [n for n in range(W + 1) if pred(n)]
    return SchematicSet(fin, frozenset(n for n in hits if n < W), W if W in hits else None)


def specialization(X: Handle) -> OmegaOrder:
    """Specialization order of ``X`` as an :class:`OmegaOrder`.

    Raises :class:`NotT0` for non-T0 spaces and :class:`Unsupported` when the
    chain points are neither linearly ordered nor pairwise incomparable.
    """
    if isinstance(X, CriticalTopology):
        return X.order
    W = window(X)
    base = {x: X.nbhds(x, W) for x in X.points(W)}

    def le(p, q):
        return all(q in B for B in base[p])

    chain_pairs = [(n, m) for n in range(W + 1) for m in range(W + 1) if n != m]
    if all(le(n, m) == (n < m) for n, m in chain_pairs):
        ordered = True
    elif not any(le(n, m) for n, m in chain_pairs):
        ordered = False
    else:
        raise Unsupported("chain points are neither a chain nor an antichain")
    fin = X.fin_labels
    for p in X.points(W):
        for q in X.points(W):
            if p != q and le(p, q) and le(q, p):
                raise NotT0(f"{p!r} and {q!r} have the same neighbourhoods")
    pairs = [(f, g) for f in fin for g in fin if f != g and le(f, g)]
    below = {f: _window_set(lambda n, f=f: is_chain_point(n) and le(n, f), (), W) for f in fin}
    above = {f: _window_set(lambda n, f=f: is_chain_point(n) and le(f, n), (), W) for f in fin}
    return OmegaOrder(build_poset(fin, pairs, "partial"), ordered, below, above)


def converges(X: Handle, target, x: Point) -> bool:
    """Convergence of a schematic net, or of a directed schematic set viewed
    as the net indexed by itself in the declared order."""
    if isinstance(target, SchematicNet):
        W = window(X, target, x if is_chain_point(x) else 0)
        return all(target.eventually_in(B) for B in X.nbhds(x, W))
    D = target
    X.order.require_directed(D)
    W = window(X, D, x if is_chain_point(x) else 0)
    m = X.order.max_element(D)
    if m is not None:
        return all(m in B for B in X.nbhds(x, W))
    # no maximum: D contains a chain tail and eventually stays in it
    return all(B.has_tail for B in X.nbhds(x, W))


def compare(T1: Handle, T2: Handle):
    """Return ``(relation, witness)``; relation is equal/finer/coarser/incomparable
    from the point of view of ``T1``.  The witness is an open set of the finer
    side that is not open in the other one."""
    W = window(T1, T2)

    def missing(A: Handle, B: Handle):
        for x in A.points(W):
            for U in A.nbhds(x, W):
                if not B.is_open(U):
                    return U
        return None

    a_not_b = missing(T1, T2)
    b_not_a = missing(T2, T1)
    if a_not_b is None and b_not_a is None:
        return "equal", None
    if b_not_a is None:
        return "finer", a_not_b
    if a_not_b is None:
        return "coarser", b_not_a
    return "incomparable", (a_not_b, b_not_a)


def truncate(X: Handle, n: int) -> FiniteTopology:
    """Subspace on the finite points and chain points ``0..n``."""
    if n < 0:
        raise ValueError("truncation needs n >= 0")
    ground = tuple(X.fin_labels) + tuple(range(n + 1))
    index = {p: i for i, p in enumerate(ground)}
    W = window(X, n)
    family = {(1 << len(ground)) - 1}
    for x in X.points(W):
        for B in X.nbhds(x, W):
            family.add(sum(1 << index[p] for p in B.points(n)))
    return FiniteTopology(ground, nbhds_from_family(len(ground), family))


def has_upper_bound(order: OmegaOrder, D: SchematicSet) -> bool:
    order.require_directed(D)
    return not order.upper_bounds(D).is_empty


def _critical_for(X: Handle, which: str, spec: OmegaOrder) -> SchematicSet:
    if which not in OMEGA_OPERATORS:
        raise ValueError(f"unknown operator {which!r}")
    if not spec.chain_ordered:
        # only finite directed sets, all with a greatest element
        return EMPTY
    W = window(X)
    primed = which.endswith("'")

    def crit(p):
        if not X.chain_converges_to(p, W):
            return False
        return not primed or (not is_chain_point(p) and spec.below[p].tail == 0)

    return _window_set(crit, spec.fin_labels, W)


def coreflect_omega(X: Handle, which: str) -> CriticalTopology:
    """Refinement of ``X`` determined by its directed (or primed) class.

    A directed set of ``F + N`` either has a greatest element or contains a
    chain tail, and a monotone sequence without a last value climbs the chain,
    so the directed, pre-chain and sequence classes agree here; ``I`` and
    ``N`` are accepted as aliases.
    """
    spec = specialization(X)
    crit = _critical_for(X, which, spec)
    return CriticalTopology(spec, crit, f"{which}({getattr(X, 'name', '?')})")


def _scott_critical(order: OmegaOrder) -> SchematicSet:
    # directed sets without a greatest element all contain a chain tail and
    # share the supremum of the chain
    if not order.chain_ordered:
        return EMPTY
    s = order.sup_chain()
    return EMPTY if s is None else SchematicSet.of([s])


def _upper_critical(order: OmegaOrder) -> SchematicSet:
    # a complement with a chain tail is covered by finitely many principal
    # down-sets avoiding x only through a finite point above a chain tail
    tops = [g for g in order.fin_labels if order.below[g].has_tail]
    W = window(order)
    return _window_set(lambda p: all(order.leq(p, g) for g in tops), order.fin_labels, W)


def upper_is_open_literal(order: OmegaOrder, U: SchematicSet) -> bool:
    """Openness in the topology generated by complements of principal down-sets,
    read off the definition: each ``x in U`` needs finitely many points not above
    ``x`` whose down-sets cover the complement of ``U``."""
    W = window(order, U)
    C = U.complement(order.fin_labels)
    for x in U.points(W):
        allowed = [y for y in list(order.fin_labels) + list(range(W + 2)) if not order.leq(x, y)]
        cover = EMPTY
        for y in allowed:
            cover = cover | order.down(y)
        if not C.issubset(cover):
            return False
        if C.has_tail and not any(not is_chain_point(y) and order.below[y].has_tail for y in allowed):
            return False
    return True


def order_topology_omega(order: OmegaOrder, kind: str) -> CriticalTopology:
    if kind == "alexandroff":
        return CriticalTopology(order, EMPTY, "alexandroff")
    if kind == "scott":
        return CriticalTopology(order, _scott_critical(order), "scott")
    if kind == "upper":
        return CriticalTopology(order, _upper_critical(order), "upper")
    if kind == "weak_scott":
        T = coreflect_omega(order_topology_omega(order, "upper"), "D")
        return CriticalTopology(T.order, T.critical, "weak_scott")
    raise ValueError(f"unknown order topology {kind!r}")


def extract_base(T: CriticalTopology) -> OmegaSpace:
    """Template presentation of a critical topology, checked against its oracle."""
    order = T.order
    W = window(T)
    templates = []
    for f in order.fin_labels:
        nb = T.nbhds(f, W)
        up = order.up(f)
        if len(nb) == 1:
            templates.append(SchemaTemplate(up.fin, up.chain, up.tail))
        elif order.chain_ordered:
            templates.append(SchemaTemplate(up.fin, up.chain, up.tail, "up"))
        else:
            raise BaseExtractionIncomplete(f"neighbourhoods of {f!r} need a chain tail in an unordered chain")
    if order.chain_ordered:
        templates.append(SchemaTemplate(param="up"))
    else:
        generic = order.up(W).fin
        for n in range(W):
            up = order.up(n)
            if up.fin != generic:
                templates.append(SchemaTemplate(up.fin, up.chain))
        templates.append(SchemaTemplate(generic, param="point"))
    try:
        space = OmegaSpace(order, tuple(templates), True, f"base({T.name})")
    except Exception as exc:  # the candidate may fail the base axioms
        raise BaseExtractionIncomplete(str(exc)) from exc
    if any(not T.is_open(B) for B in space.instances(W)) or compare(space, T)[0] != "equal":
        raise BaseExtractionIncomplete(f"no template base found for {T.name}")
    return space
