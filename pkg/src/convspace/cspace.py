"""Continuous spaces and the class of nets with a converging directed set of
eventual lower bounds."""

from __future__ import annotations

from dataclasses import dataclass

from .convergence import FiniteNet, converges as fin_converges, determined_topology, tail
from .order import bits, enumerate_directed_subsets, top_class
from .topology import FiniteTopology, specialization
from .omega.ops import _window_set, converges as om_converges, specialization as omega_specialization
from .omega.sets import Ramp, SchematicNet, SchematicSet, alternating, constant, is_chain_point, ramp
from .omega.space import Constraint, ConstraintTopology, Handle, window


@dataclass(frozen=True)
class CSpaceVerdict:
    value: bool
    point: object = None
    neighbourhood: object = None

    def __bool__(self):
        return self.value


@dataclass(frozen=True)
class SClassQuery:
    space: object
    net: object
    point: object


@dataclass(frozen=True)
class Verdict:
    status: str  # topological, refuted or undetermined
    witness: SClassQuery | None = None
    checked: int = 0


# -- c-space test -------------------------------------------------------------

def is_c_space(X) -> CSpaceVerdict:
    """Each neighbourhood ``U`` of ``x`` holds some ``y`` with ``x`` in the interior of ``up(y)``."""
    if isinstance(X, FiniteTopology):
        P = specialization(X)
        for x in range(X.n):
            U = X.nbhd[x]  # smallest nbhd; larger ones only add candidates
            if not any((X.interior(P.up[y]) >> x) & 1 for y in bits(U)):
                return CSpaceVerdict(False, X.ground[x], X.labels(U))
        return CSpaceVerdict(True)
    spec = omega_specialization(X)
    W = window(X)
    for x in X.points(W):
        for U in X.nbhds(x, W):
            found = False
            for y in U.points(W + 1):
                up = spec.up(y)
                if any(V.issubset(up) for V in X.nbhds(x, W)):
                    found = True
                    break
            if not found:
                return CSpaceVerdict(False, x, U)
    return CSpaceVerdict(True)


# -- eventual lower bounds ----------------------------------------------------

def eventual_lower_bounds(X, net):
    """Points ``y`` such that the net is eventually in ``up(y)``."""
    if isinstance(X, FiniteTopology):
        P = specialization(X)
        ev = net.members if net.kind == "tail" else top_class(P, net.members)
        return P.lower_bounds(ev)
    spec = omega_specialization(X)
    W = window(X, net)
    return _window_set(lambda y: net.eventually_in(spec.up(y)), spec.fin_labels, W)


def in_s_class(X, net, x) -> bool:
    """Some directed set of eventual lower bounds converges to ``x``."""
    if isinstance(X, FiniteTopology):
        P = specialization(X)
        EL = eventual_lower_bounds(X, net)
        xi = X.index[x] if x in X.index else x
        return any(fin_converges(X, FiniteNet("directed", D), xi, P)
                   for D in enumerate_directed_subsets(P) if D & ~EL == 0)
    spec = omega_specialization(X)
    EL = eventual_lower_bounds(X, net)
    W = window(X, net, EL, x if is_chain_point(x) else 0)
    nb = X.nbhds(x, W)
    # directed sets with a greatest element m converge to x iff m is in every nbhd of x
    for m in EL.points(W):
        if all(m in B for B in nb):
            return True
    # directed sets without one contain a chain tail of an ordered chain
    if spec.chain_ordered and EL.has_tail:
        return all(B.has_tail for B in nb)
    return False


# -- the determined topology ----------------------------------------------------

def _finite_s_pairs(X: FiniteTopology):
    for S in range(1, 1 << X.n):
        net = tail(S)
        for x in range(X.n):
            if in_s_class(X, net, x):
                yield net, x


def battery(X: Handle) -> list[SchematicNet]:
    """Constant nets, chain ramps per residue class and alternating nets."""
    W = window(X)
    nets = [constant(p) for p in X.points(W)]
    nets += [ramp(), ramp(2, 0), ramp(2, 1), ramp(3, 2)]
    for f in X.fin_labels:
        nets.append(alternating(f))
        nets.append(alternating(f, 2, 1))
    fins = list(X.fin_labels)
    for i, f in enumerate(fins):
        for g in fins[i + 1:]:
            nets.append(SchematicNet((f, g)))
            nets.append(SchematicNet((f, g, Ramp(1))))
    return nets


def s_topology(X):
    """Topology determined by the eventual-lower-bound class.

    Finite spaces use every principal tail net.  For ω-spaces the class is
    sampled on :func:`battery`; each net contributes one constraint whose
    trigger is the set of its limits in the class.
    """
    if isinstance(X, FiniteTopology):
        return determined_topology(X.ground, list(_finite_s_pairs(X)))
    spec = omega_specialization(X)
    constraints = []
    for net in battery(X):
        W = window(X, net)
        trigger = _window_set(lambda x, net=net: in_s_class(X, net, x), spec.fin_labels, W)
        if trigger.is_empty:
            continue
        constraints.append(Constraint(trigger, SchematicSet.of(net.fixed_points), bool(net.ramps)))
    return ConstraintTopology(spec, tuple(constraints), f"S({getattr(X, 'name', '?')})")


def s_class_topological(X, witnesses=None) -> Verdict:
    """Compare the class with convergence in ``X``.

    Finite spaces are decided over all principal tail nets.  For ω-spaces a
    net converging in ``X`` but missing from the class refutes; otherwise
    the verdict is ``topological`` for continuous spaces and ``undetermined``
    for the rest, both relative to the nets tried.
    """
    checked = 0
    if isinstance(X, FiniteTopology):
        for S in range(1, 1 << X.n):
            net = tail(S)
            for x in range(X.n):
                checked += 1
                if fin_converges(X, net, x) != in_s_class(X, net, x):
                    return Verdict("refuted", SClassQuery(X, net, X.ground[x]), checked)
        return Verdict("topological", None, checked)
    W = window(X)
    queries = list(witnesses) if witnesses is not None else [
        SClassQuery(X, n, x) for n in battery(X) for x in X.points(W)]
    for q in queries:
        checked += 1
        if om_converges(X, q.net, q.point) and not in_s_class(X, q.net, q.point):
            return Verdict("refuted", q, checked)
    return Verdict("topological" if is_c_space(X) else "undetermined", None, checked)
