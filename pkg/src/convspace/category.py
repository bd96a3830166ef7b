"""Products, function spaces and law checks for finite determined spaces.

Maps are tuples of target indices.  Every check returns a :class:`LawReport`
and raises :class:`LawViolation` on failure unless ``raise_on_fail=False``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as cartesian
from typing import Iterable, Sequence

import numpy as np

from .convergence import OPERATORS, class_contains, coreflect, image, is_determined, op_class
from .errors import LawViolation, NotDetermined, SizeCap
from .order import enumerate_monotone
from .topology import (FiniteTopology, continuous, final_topology, is_T0, nbhds_from_family,
                       one_point, product, specialization, spaces_up_to)

DEFAULT_MAX_SIZE = 12


@dataclass
class LawReport:
    law: str
    instances: int = 0
    verdict: str = "pass"
    counterexample: object = None

    def fail(self, counterexample) -> None:
        if self.verdict == "pass":
            self.verdict = "fail"
            self.counterexample = counterexample

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def as_dict(self) -> dict:
        return {"law": self.law, "instances": self.instances, "verdict": self.verdict,
                "counterexample": None if self.counterexample is None else repr(self.counterexample)}


def _finish(report: LawReport, raise_on_fail: bool) -> LawReport:
    if not report.passed and raise_on_fail:
        raise LawViolation(report)
    return report


@dataclass(frozen=True)
class HomSet:
    source: FiniteTopology
    target: FiniteTopology
    maps: tuple

    def __len__(self):
        return len(self.maps)

    def __iter__(self):
        return iter(self.maps)


def _cap(max_size: int | None, *spaces: FiniteTopology) -> None:
    cap = DEFAULT_MAX_SIZE if max_size is None else max_size
    for S in spaces:
        if S.n > cap:
            raise SizeCap(f"space with {S.n} points exceeds the cap of {cap}")


def hom_set(X: FiniteTopology, Y: FiniteTopology, max_size: int | None = None) -> HomSet:
    """All continuous maps: monotone maps of the specialization orders, re-checked for continuity."""
    _cap(max_size, X, Y)
    maps = tuple(f for f in enumerate_monotone(specialization(X), specialization(Y))
                 if continuous(f, X, Y))
    return HomSet(X, Y, maps)


def pointwise_space(X: FiniteTopology, Y: FiniteTopology, max_size: int | None = None) -> FiniteTopology:
    """Continuous maps with the topology of pointwise convergence.

    Points are labelled by the tuple of target labels.  The subbasic open
    ``{f : f(x) in U}`` is smallest for ``U`` the minimal neighbourhood of
    ``f(x)``, which gives each map's minimal neighbourhood directly.
    """
    maps = hom_set(X, Y, max_size).maps
    ground = tuple(tuple(Y.ground[v] for v in f) for f in maps)
    nb = []
    for f in maps:
        u = 0
        for k, g in enumerate(maps):
            if all((Y.nbhd[f[x]] >> g[x]) & 1 for x in range(X.n)):
                u |= 1 << k
        nb.append(u)
    return FiniteTopology(ground, tuple(nb))


def _carrier_maps(E: FiniteTopology, Y: FiniteTopology) -> list[tuple]:
    idx = {y: i for i, y in enumerate(Y.ground)}
    return [tuple(idx[v] for v in f) for f in E.ground]


def tensor(X: FiniteTopology, Y: FiniteTopology, which: str = "D") -> FiniteTopology:
    for S in (X, Y):
        if not is_determined(S, which):
            raise NotDetermined(f"factor is not {which}-determined")
    return coreflect(product(X, Y), which)


def exponential(X: FiniteTopology, Y: FiniteTopology, which: str = "D",
                max_size: int | None = None) -> FiniteTopology:
    for S in (X, Y):
        if not is_determined(S, which):
            raise NotDetermined(f"factor is not {which}-determined")
    return coreflect(pointwise_space(X, Y, max_size), which)


def pointwise_order(X: FiniteTopology, Y: FiniteTopology, maps: Sequence[tuple]):
    spec = specialization(Y)
    n = len(maps)
    leq = np.zeros((n, n), dtype=bool)
    for i, f in enumerate(maps):
        for j, g in enumerate(maps):
            leq[i, j] = all(spec.leq[f[x], g[x]] for x in range(X.n))
    return leq


def product_order(X: FiniteTopology, Y: FiniteTopology):
    sx, sy = specialization(X), specialization(Y)
    return np.kron(sx.leq.astype(np.uint8), sy.leq.astype(np.uint8)).astype(bool)


# -- law checks -------------------------------------------------------------

def check_exponential_law(X: FiniteTopology, Y: FiniteTopology, Z: FiniteTopology, which: str = "D",
                          max_size: int | None = None, raise_on_fail: bool = True) -> LawReport:
    """Evaluation is continuous, currying is a bijection
    ``hom(Z (x) X, Y) -> hom(Z, [X -> Y])`` and the curried map is the only
    mediating morphism."""
    rep = LawReport(f"exponential[{which}]")
    big = max_size if max_size is not None else DEFAULT_MAX_SIZE
    E = exponential(X, Y, which, big)
    carrier = _carrier_maps(E, Y)
    where = {f: k for k, f in enumerate(carrier)}
    EX = tensor(E, X, which)
    ev = tuple(carrier[k][x] for k in range(E.n) for x in range(X.n))
    rep.instances += 1
    if not continuous(ev, EX, Y):
        rep.fail(("evaluation not continuous", E.ground))
    ZX = tensor(Z, X, which)
    left = hom_set(ZX, Y, big).maps
    right = hom_set(Z, E, big).maps
    rep.instances += len(left) + len(right)
    if len(left) != len(right):
        rep.fail(("cardinality", len(left), len(right)))
    right_set = set(right)
    curried = set()
    for f in left:
        lam = []
        for z in range(Z.n):
            row = tuple(f[z * X.n + x] for x in range(X.n))
            if row not in where:
                rep.fail(("curried row not continuous", f, z))
                break
            lam.append(where[row])
        else:
            lam = tuple(lam)
            if lam not in right_set:
                rep.fail(("curried map not continuous", f))
            curried.add(lam)
            # uncurry back and compare on the nose
            back = tuple(carrier[lam[z]][x] for z in range(Z.n) for x in range(X.n))
            if back != f:
                rep.fail(("uncurry does not invert curry", f))
    if len(curried) != len(left):
        rep.fail("currying is not injective")
    # uniqueness: each g in hom(Z, E) is determined by ev o (g x id)
    seen = {}
    for g in right:
        f = tuple(carrier[g[z]][x] for z in range(Z.n) for x in range(X.n))
        if f in seen:
            rep.fail(("two mediating maps", seen[f], g))
        seen[f] = g
        if not continuous(f, ZX, Y):
            rep.fail(("uncurried map not continuous", g))
    return _finish(rep, raise_on_fail)


def check_product_universal(X: FiniteTopology, Y: FiniteTopology, which: str = "D",
                            test_spaces: Iterable[FiniteTopology] = (), max_size: int | None = None,
                            raise_on_fail: bool = True) -> LawReport:
    rep = LawReport(f"product[{which}]")
    big = max_size if max_size is not None else DEFAULT_MAX_SIZE
    T = tensor(X, Y, which)
    p1 = tuple(i // Y.n for i in range(T.n))
    p2 = tuple(i % Y.n for i in range(T.n))
    rep.instances += 1
    if not (continuous(p1, T, X) and continuous(p2, T, Y)):
        rep.fail("projection not continuous")
    for Z in test_spaces:
        into_T = hom_set(Z, T, big).maps
        by_legs = {}
        for h in into_T:
            legs = (tuple(p1[v] for v in h), tuple(p2[v] for v in h))
            by_legs.setdefault(legs, []).append(h)
        for f1 in hom_set(Z, X, big).maps:
            for f2 in hom_set(Z, Y, big).maps:
                rep.instances += 1
                pairing = tuple(f1[z] * Y.n + f2[z] for z in range(Z.n))
                if not continuous(pairing, Z, T):
                    rep.fail(("pairing not continuous", Z.ground, f1, f2))
                if by_legs.get((f1, f2), []) != [pairing]:
                    rep.fail(("mediating map not unique", Z.ground, f1, f2))
    return _finish(rep, raise_on_fail)


def check_coreflection_universal(Y: FiniteTopology, which: str,
                                 test_spaces: Iterable[FiniteTopology],
                                 raise_on_fail: bool = True) -> LawReport:
    """Identity ``P(Y) -> Y`` is continuous and every map from a determined
    space into ``Y`` stays continuous into ``P(Y)``."""
    rep = LawReport(f"coreflection[{which}]")
    PY = coreflect(Y, which)
    ident = tuple(range(Y.n))
    rep.instances += 1
    if not continuous(ident, PY, Y):
        rep.fail("identity P(Y) -> Y not continuous")
    for X in test_spaces:
        if not is_determined(X, which):
            continue
        for f in hom_set(X, Y, max(X.n, Y.n)).maps:
            rep.instances += 1
            if not continuous(f, X, PY):
                rep.fail(("map does not factor", X.ground, f))
    return _finish(rep, raise_on_fail)


def check_idempotence(X: FiniteTopology, which: str, raise_on_fail: bool = True) -> LawReport:
    rep = LawReport(f"idempotence[{which}]", instances=1)
    once = coreflect(X, which)
    if coreflect(once, which).nbhd != once.nbhd:
        rep.fail(X.nbhd)
    return _finish(rep, raise_on_fail)


def check_consistency(X: FiniteTopology, Y: FiniteTopology, which: str,
                      raise_on_fail: bool = True) -> LawReport:
    """Continuous maps carry class pairs of ``X`` to class pairs of ``Y``."""
    rep = LawReport(f"consistency[{which}]")
    pairs = op_class(X, which).pairs
    spec_y = specialization(Y)
    for f in hom_set(X, Y, max(X.n, Y.n)).maps:
        for net, x in pairs:
            rep.instances += 1
            if not class_contains(Y, which, image(net, f), f[x], spec_y):
                rep.fail((f, net, x))
    return _finish(rep, raise_on_fail)


def check_separate_continuity(X: FiniteTopology, Y: FiniteTopology, Z: FiniteTopology,
                              raise_on_fail: bool = True) -> LawReport:
    """Separately continuous maps on ``X (x) Y`` are exactly the jointly continuous ones."""
    rep = LawReport("separate-continuity")
    T = tensor(X, Y, "D")
    for g in cartesian(range(Z.n), repeat=X.n * Y.n):
        rep.instances += 1
        sep = all(continuous(tuple(g[x * Y.n + y] for y in range(Y.n)), Y, Z) for x in range(X.n)) and \
            all(continuous(tuple(g[x * Y.n + y] for x in range(X.n)), X, Z) for y in range(Y.n))
        if sep != continuous(g, T, Z):
            rep.fail(g)
    return _finish(rep, raise_on_fail)


def check_T0_preservation(X: FiniteTopology, Y: FiniteTopology, which: str = "D",
                          max_size: int | None = None, raise_on_fail: bool = True) -> LawReport:
    rep = LawReport(f"T0[{which}]", instances=2)
    if not is_T0(tensor(X, Y, which)):
        rep.fail("tensor")
    if not is_T0(exponential(X, Y, which, max_size)):
        rep.fail("exponential")
    return _finish(rep, raise_on_fail)


def check_specialization_orders(X: FiniteTopology, Y: FiniteTopology, which: str = "D",
                                max_size: int | None = None, raise_on_fail: bool = True) -> LawReport:
    """Tensor carries the product order, the exponential the pointwise order."""
    rep = LawReport(f"specialization[{which}]", instances=2)
    if not np.array_equal(specialization(tensor(X, Y, which)).leq, product_order(X, Y)):
        rep.fail("tensor")
    E = exponential(X, Y, which, max_size)
    if not np.array_equal(specialization(E).leq, pointwise_order(X, Y, _carrier_maps(E, Y))):
        rep.fail("exponential")
    return _finish(rep, raise_on_fail)


# -- probes from generating spaces -------------------------------------------

def directed_shapes(max_size: int) -> list:
    """Finite posets with a top element, up to isomorphism, with 1..max_size points."""
    out = []
    for T in spaces_up_to(max_size, t0=True):
        P = specialization(T)
        if any(P.up[i] == 1 << i and P.down[i] == P.full for i in range(P.n)):
            out.append(P)
    return out


def generating_space(P, kind: str) -> FiniteTopology:
    """``P`` plus a new point ``∞`` with subbase ``↑x`` and ``↑x ∪ {∞}`` (kind ``beta``)
    or ``↑x ∪ {∞}`` only (kind ``gamma``)."""
    n = P.n
    inf = 1 << n
    subbase = [P.up[i] | inf for i in range(n)]
    if kind == "beta":
        subbase += [P.up[i] for i in range(n)]
    elif kind != "gamma":
        raise ValueError(kind)
    subbase.append((1 << (n + 1)) - 1)
    return FiniteTopology(tuple(P.elements) + ("∞",), nbhds_from_family(n + 1, subbase))


def probe_generated(X: FiniteTopology, which: str = "D", max_gen_size: int = 3) -> FiniteTopology:
    """Final topology for all continuous maps out of the finite generating spaces.

    ``max_gen_size=0`` leaves only the one-point space.
    """
    if which not in OPERATORS:
        raise ValueError(which)
    kind = "gamma" if which.endswith("'") else "beta"
    sources = [one_point()]
    for P in directed_shapes(max_gen_size):
        if which[0] in "IN" and not all(P.leq[i, j] or P.leq[j, i] for i in range(P.n) for j in range(P.n)):
            continue
        sources.append(generating_space(P, kind))
    probes = []
    for S in sources:
        for k in hom_set(S, X, max(S.n, X.n)).maps:
            probes.append((S, k))
    return final_topology(X.ground, probes)


# -- function space on omega, pointwise facts --------------------------------

def example_dif_facts(W: int = 8) -> LawReport:
    """Constant maps ``f_n = n`` converge pointwise to the identity on Scott ω,
    yet the identity lies below none of them.

    Scott opens of ω are the tails, so convergence of the coordinate net
    ``n -> f_n(x)`` is checked on every tail neighbourhood of ``x``; the
    failure of ``id <= f_n`` is witnessed at ``x = n + 1``.
    """
    from .omega import converges, omega, order_topology_omega, ramp
    rep = LawReport("pointwise-limit-not-bound")
    order = omega()
    scott = order_topology_omega(order, "scott")
    for x in range(W + 1):
        rep.instances += 1
        if not converges(scott, ramp(), x):
            rep.fail(("coordinate net does not converge", x))
    for n in range(W + 1):
        rep.instances += 1
        if all(order.leq(x, n) for x in range(n + 2)):
            rep.fail(("id below constant", n))
    return rep
