"""Reproduction suite: the worked examples and law checks, one record per item.

Every record is a plain dict ``{id, name, verdict, instances, detail}`` with
deterministic contents, so the JSON rendering of :func:`run_suite` can be
compared byte for byte against a stored copy.
"""

from __future__ import annotations

import random
from itertools import product as cartesian

from .category import (check_consistency, check_coreflection_universal, check_exponential_law,
                       check_idempotence, check_separate_continuity, check_specialization_orders,
                       check_T0_preservation, example_dif_facts, probe_generated)
from .convergence import OPERATORS, coreflect, determined_topology, directed, closure_transfinite
from .cspace import in_s_class, is_c_space, s_topology
from .omega import (BUNDLED, CHAIN, INF, SchematicSet, alternating, beta, compare, converges,
                    coreflect_omega, delta, example_E, gamma, has_upper_bound, omega,
                    omega_plus_one, order_topology_omega)
from .omega.space import window
from .order import bits, cut, enumerate_directed_subsets
from .topology import spaces_up_to, specialization

CRITERIA = {
    1: "monotone determined example E",
    2: "primed refinement witness on beta, fixed points beta and gamma",
    3: "delta refines to the discrete topology",
    4: "Scott and weak Scott agree on dcpos",
    5: "transfinite closure equals topological closure",
    6: "coreflection laws",
    7: "cartesian closure laws",
    8: "separate equals joint continuity",
    9: "T0 and specialization orders of tensor and exponential",
    10: "probe-generated topology equals coreflection",
    11: "continuous spaces and the eventual-lower-bound class",
    12: "pointwise limit without an order bound",
    13: "chain without an upper bound in omega",
}


class _Check:
    """Collects named facts; the first false one becomes the detail."""

    def __init__(self):
        self.instances = 0
        self.failure = None

    def __call__(self, ok: bool, what: str) -> None:
        self.instances += 1
        if not ok and self.failure is None:
            self.failure = what

    def add(self, report) -> None:
        self.instances += report.instances
        if not report.passed and self.failure is None:
            self.failure = f"{report.law}: {report.counterexample!r}"

    def record(self, cid: int, detail: str) -> dict:
        return {"id": cid, "name": CRITERIA[cid],
                "verdict": "pass" if self.failure is None else "fail",
                "instances": self.instances,
                "detail": detail if self.failure is None else self.failure}


def _t0_spaces(n: int, exact: bool = False):
    spaces = spaces_up_to(n, t0=True)
    return [T for T in spaces if T.n == n] if exact else spaces


# -- omega examples -------------------------------------------------------------

def criterion_1() -> dict:
    c = _Check()
    E = example_E()
    c(compare(coreflect_omega(E, "D"), E)[0] == "equal", "D(E) differs from E")
    U = SchematicSet.of([INF, "a"])
    c(coreflect_omega(E, "D'").is_open(U), "{∞,a} not open in D'(E)")
    c(not E.is_open(U), "{∞,a} open in E")
    return c.record(1, "D(E) = E; {∞,a} open in D'(E) only")


def criterion_2() -> dict:
    c = _Check()
    B = beta()
    verdict, witness = compare(coreflect_omega(B, "D'"), B)
    c(verdict == "finer", f"D'(beta) is {verdict}")
    c(coreflect_omega(B, "D'").is_open(SchematicSet.of([INF])), "{∞} not open in D'(beta)")
    c(not B.is_open(SchematicSet.of([INF])), "{∞} open in beta")
    c(compare(coreflect_omega(B, "D"), B)[0] == "equal", "D(beta) differs from beta")
    G = gamma()
    c(compare(coreflect_omega(G, "D'"), G)[0] == "equal", "D'(gamma) differs from gamma")
    return c.record(2, f"D'(beta) finer, witness {witness.describe()}; D(beta) = beta; D'(gamma) = gamma")


def criterion_3() -> dict:
    c = _Check()
    X = delta()
    R = coreflect_omega(X, "D")
    W = window(R)
    for p in R.points(W + 1):
        c(R.is_open(SchematicSet.of([p])), f"{{{p}}} not open in D(delta)")
    c(compare(R, X)[0] == "finer", "D(delta) not strictly finer than delta")
    return c.record(3, "every singleton open in D(delta), strictly finer than delta")


def criterion_4() -> dict:
    c = _Check()
    top = omega_plus_one()
    scott = order_topology_omega(top, "scott")
    c(compare(scott, order_topology_omega(top, "weak_scott"))[0] == "equal", "scott != weak scott on ω+1")
    verdict, witness = compare(order_topology_omega(top, "alexandroff"), scott)
    c(verdict == "finer", f"alexandroff vs scott on ω+1: {verdict}")
    w = omega()
    c(compare(order_topology_omega(w, "alexandroff"), order_topology_omega(w, "scott"))[0] == "equal",
      "alexandroff != scott on ω")
    return c.record(4, f"ω+1: scott = weak scott, alexandroff finer (witness {witness.describe()}); "
                       f"ω: alexandroff = scott")


# -- finite closure and laws ---------------------------------------------------------

def _sandwich_pairs(P):
    required, optional = [], []
    for D in enumerate_directed_subsets(P):
        for x in bits(cut(P, D)):
            (required if D & (D - 1) == 0 else optional).append((directed(D), x))
    return required, optional


def _closure_agrees(P, cls) -> str | None:
    E = determined_topology(P.elements, cls, P)
    for F in range(1 << P.n):
        _, star = closure_transfinite(P, cls, F)
        if star != E.closure(F):
            return f"F={P.labels(F)} on {P.elements}: F*={P.labels(star)}"
    return None


def criterion_5(seed: int = 0, samples_at_4: int = 256) -> dict:
    c = _Check()
    rng = random.Random(seed)
    for T in _t0_spaces(4):
        P = specialization(T)
        required, optional = _sandwich_pairs(P)
        if T.n <= 3:
            choices = range(1 << len(optional))
        else:
            full = (1 << len(optional)) - 1
            choices = [0, full] + [rng.getrandbits(len(optional)) for _ in range(samples_at_4)]
        for pick in choices:
            cls = required + [optional[k] for k in bits(pick)]
            bad = _closure_agrees(P, cls)
            c(bad is None, bad or "")
    return c.record(5, "F* = closure for every sandwich class at ≤3 points, "
                       f"least, greatest and {samples_at_4} random classes per 4-point space")


def criterion_6(seed: int = 0, samples_at_4: int = 24) -> dict:
    c = _Check()
    rng = random.Random(seed)
    small = _t0_spaces(3)
    four = _t0_spaces(4, exact=True)
    pairs = list(cartesian(small, small))
    sampled = sorted(rng.sample(range(len(four) * len(small)), samples_at_4))
    extra = [(four[k // len(small)], small[k % len(small)]) for k in sampled]
    for which in OPERATORS:
        for X in small + four:
            c.add(check_idempotence(X, which, raise_on_fail=False))
        for X, Y in pairs + extra:
            c.add(check_consistency(X, Y, which, raise_on_fail=False))
            c.add(check_consistency(Y, X, which, raise_on_fail=False))
        for Y in small:
            c.add(check_coreflection_universal(Y, which, small, raise_on_fail=False))
        for Y in four:
            c.add(check_coreflection_universal(Y, which, small, raise_on_fail=False))
    return c.record(6, "idempotence, consistency and universal property, six operators")


def criterion_7(seed: int = 0, samples_at_3: int = 24, max_size: int = 128) -> dict:
    c = _Check()
    rng = random.Random(seed)
    tiny = _t0_spaces(2)
    small = _t0_spaces(3)
    for which in ("D", "D'"):
        for X, Y, Z in cartesian(tiny, tiny, tiny):
            c.add(check_exponential_law(X, Y, Z, which, max_size, raise_on_fail=False))
        for _ in range(samples_at_3):
            X, Y, Z = (small[rng.randrange(len(small))] for _ in range(3))
            c.add(check_exponential_law(X, Y, Z, which, max_size, raise_on_fail=False))
    return c.record(7, f"currying, evaluation and uniqueness, exhaustive ≤2, {samples_at_3} samples at ≤3")


def criterion_8() -> dict:
    c = _Check()
    tiny = _t0_spaces(2)
    for X, Y, Z in cartesian(tiny, tiny, tiny):
        c.add(check_separate_continuity(X, Y, Z, raise_on_fail=False))
    return c.record(8, "exhaustive ≤2")


def criterion_9(max_size: int = 128) -> dict:
    c = _Check()
    small = _t0_spaces(3)
    for which in ("D", "D'"):
        for X, Y in cartesian(small, small):
            c.add(check_T0_preservation(X, Y, which, max_size, raise_on_fail=False))
            c.add(check_specialization_orders(X, Y, which, max_size, raise_on_fail=False))
    return c.record(9, "exhaustive ≤3, operators D and D'")


def criterion_10() -> dict:
    c = _Check()
    for X in _t0_spaces(3):
        c(probe_generated(X, "D", 3).nbhd == coreflect(X, "D").nbhd, f"probe mismatch on {X.ground}")
    return c.record(10, "all T0 spaces ≤3")


# -- continuous spaces ----------------------------------------------------------------

def criterion_11() -> dict:
    c = _Check()
    E = example_E()
    verdict = is_c_space(E)
    c(not verdict, "E reported continuous")
    c(bool(is_c_space(BUNDLED["scott_omega_plus_one"]())), "Scott ω+1 not continuous")
    for name in sorted(BUNDLED):
        X = BUNDLED[name]()
        c(compare(s_topology(X), coreflect_omega(X, "D"))[0] == "equal", f"S({name}) != D({name})")
    for T in _t0_spaces(4):
        c(s_topology(T).nbhd == coreflect(T, "D").nbhd, f"S != D on {T.ground} {T.nbhd}")
    net = alternating("a")
    c(converges(E, net, "a"), "(a, 2n) does not converge to a in E")
    c(not in_s_class(E, net, "a"), "(a, 2n) -> a lies in the class")
    return c.record(11, f"E not continuous at {verdict.point}; (a, 2n) -> a converges outside the class")


def criterion_12() -> dict:
    c = _Check()
    c.add(example_dif_facts())
    return c.record(12, "f_n -> id pointwise, id <= f_n fails for each n")


def criterion_13() -> dict:
    c = _Check()
    c(not has_upper_bound(omega(), CHAIN), "N bounded in ω")
    c(has_upper_bound(omega_plus_one(), CHAIN), "N unbounded in ω+1")
    return c.record(13, "N has no upper bound in ω, and ∞ bounds it in ω+1")


def run_suite(seed: int = 0, only=None) -> list[dict]:
    """Run the criteria (all, or the ids in ``only``) in order."""
    runners = {
        1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4,
        5: lambda: criterion_5(seed), 6: lambda: criterion_6(seed), 7: lambda: criterion_7(seed),
        8: criterion_8, 9: criterion_9, 10: criterion_10, 11: criterion_11,
        12: criterion_12, 13: criterion_13,
    }
    ids = sorted(runners) if only is None else sorted(only)
    return [runners[i]() for i in ids]
