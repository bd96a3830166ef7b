"""Topologies on ``F + N`` given by finite data.

Every handle exposes the same small interface:

``order``
    an :class:`OmegaOrder` (declared order for template spaces, the
    specialization order for the other handles);
``bound``
    every constant the handle mentions is below it;
``nbhds(x, W)``
    a finite list of open neighbourhoods of ``x`` containing, up to
    relabelling of chain points beyond the horizon, every basic one;
``is_open(U)``
    exact openness of a schematic set.

Chain points at or beyond the bound behave alike, so quantifying over the
finite points, chain points ``0..W`` and family parameters ``0..W+1`` with
``W`` two past every bound in play decides statements about all points.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import TemplateIllFormed
from .order import OmegaOrder, omega_order
from .sets import CHAIN, EMPTY, Point, SchematicSet, is_chain_point


def window(*objects) -> int:
    return max(getattr(o, "bound", 0) if not isinstance(o, int) else o + 1 for o in objects) + 2


@dataclass(frozen=True)
class SchemaTemplate:
    fixed_fin: frozenset = frozenset()
    fixed_chain: frozenset = frozenset()
    tail_from: int | None = None
    param: str | None = None  # None, "up" or "point"

    def __post_init__(self):
        if self.param not in (None, "up", "point"):
            raise TemplateIllFormed(f"unknown template parameter {self.param!r}")
        object.__setattr__(self, "fixed_fin", frozenset(self.fixed_fin))
        object.__setattr__(self, "fixed_chain", frozenset(self.fixed_chain))

    @property
    def fixed(self) -> SchematicSet:
        return SchematicSet(self.fixed_fin, self.fixed_chain, self.tail_from)

    @property
    def bound(self) -> int:
        return self.fixed.bound

    def instance(self, order: OmegaOrder, n: int | None = None) -> SchematicSet:
        if self.param is None:
            return self.fixed
        if n is None:
            raise TemplateIllFormed("parametrised template needs a chain point")
        part = order.up(n) if self.param == "up" else SchematicSet(chain=frozenset({n}))
        return part | self.fixed

    def instances(self, order: OmegaOrder, W: int) -> list[SchematicSet]:
        if self.param is None:
            return [self.fixed]
        return [self.instance(order, m) for m in range(W + 2)]

    def describe(self) -> str:
        fixed = self.fixed.describe()
        if self.param == "up":
            return f"up(n) ∪ {fixed}"
        if self.param == "point":
            return f"{{n}} ∪ {fixed}"
        return fixed


class Handle:
    """Shared behaviour of the topology handles."""

    name: str = "?"
    order: OmegaOrder

    @property
    def fin_labels(self) -> tuple:
        return self.order.fin_labels

    def points(self, W: int) -> list[Point]:
        return list(self.fin_labels) + list(range(W + 1))

    def nbhds(self, x: Point, W: int) -> list[SchematicSet]:
        raise NotImplementedError

    def is_open(self, U: SchematicSet) -> bool:
        raise NotImplementedError

    def chain_converges_to(self, x: Point, W: int | None = None) -> bool:
        """Every neighbourhood of ``x`` contains a chain tail."""
        W = window(self) if W is None else W
        return all(B.has_tail for B in self.nbhds(x, W))


@dataclass(frozen=True, eq=False)
class OmegaSpace(Handle):
    order: OmegaOrder
    templates: tuple
    order_compatible: bool = True
    name: str = "omega"

    def __post_init__(self):
        object.__setattr__(self, "templates", tuple(self.templates))
        self._validate()

    @property
    def bound(self) -> int:
        return max([self.order.bound] + [t.bound for t in self.templates]) + 1

    def instances(self, W: int) -> list[SchematicSet]:
        out = []
        for t in self.templates:
            out.extend(t.instances(self.order, W))
        return out

    def nbhds(self, x: Point, W: int) -> list[SchematicSet]:
        return [B for B in self.instances(W) if x in B]

    def is_open(self, U: SchematicSet) -> bool:
        W = window(self, U)
        for x in U.points(W):
            if not any(B.issubset(U) for B in self.nbhds(x, W)):
                return False
        return True

    def _validate(self) -> None:
        W = window(self)
        inst = self.instances(W)
        for x in self.points(W):
            around = [B for B in inst if x in B]
            if not around:
                raise TemplateIllFormed(f"point {x!r} is in no basic open set")
            for i, B1 in enumerate(around):
                for B2 in around[i:]:
                    meet = B1 & B2
                    if not any(B3.issubset(meet) for B3 in around):
                        raise TemplateIllFormed(
                            f"no basic set around {x!r} inside {B1.describe()} ∩ {B2.describe()}")


@dataclass(frozen=True, eq=False)
class CriticalTopology(Handle):
    """Up-sets of ``order`` that contain a chain tail whenever they meet ``critical``.

    Alexandroff, Scott and upper topologies and all the coreflections computed
    here have this shape.
    """
    order: OmegaOrder
    critical: SchematicSet = EMPTY
    name: str = "critical"

    @property
    def bound(self) -> int:
        return max(self.order.bound, self.critical.bound) + 1

    def is_open(self, U: SchematicSet) -> bool:
        if not self.order.is_up_set(U):
            return False
        return (U & self.critical).is_empty or U.has_tail

    def nbhds(self, x: Point, W: int) -> list[SchematicSet]:
        up = self.order.up(x)
        if up.has_tail or (up & self.critical).is_empty:
            return [up]
        return [self.order.up_set(up | SchematicSet(tail=m)) for m in range(W + 2)]


# -- bundled spaces ---------------------------------------------------------

INF = "∞"


def beta() -> OmegaSpace:
    """Chain plus an extra point; basic opens ``up(n)`` and ``up(n) ∪ {∞}``."""
    order = omega_order([INF])
    return OmegaSpace(order, (SchemaTemplate(param="up"),
                              SchemaTemplate(fixed_fin={INF}, param="up")), True, "beta")


def gamma() -> OmegaSpace:
    """Basic opens ``up(n) ∪ {∞}`` only; ``∞`` ends up on top."""
    order = omega_order([INF], below={INF: CHAIN})
    return OmegaSpace(order, (SchemaTemplate(fixed_fin={INF}, param="up"),), True, "gamma")


def delta() -> OmegaSpace:
    """Basic opens ``up(n) ∪ {∞}`` and the singletons ``{n}``.

    The declared order is that of ``gamma``; the specialization order is
    discrete, so the space is flagged as not order compatible.
    """
    order = omega_order([INF], below={INF: CHAIN})
    return OmegaSpace(order, (SchemaTemplate(fixed_fin={INF}, param="up"),
                              SchemaTemplate(param="point")), False, "delta")


def scott_omega_plus_one() -> OmegaSpace:
    order = omega_order([INF], below={INF: CHAIN})
    return OmegaSpace(order, (SchemaTemplate(param="up"),), True, "scott_omega_plus_one")


def example_E() -> OmegaSpace:
    """Ground ``N ∪ {∞, a, ⊥}`` with opens ``E``, ``{∞}``, ``↑n``, ``↑n ∪ {∞}``, ``↑n ∪ {∞, a}``."""
    order = omega_order([INF, "a", "⊥"], [("⊥", "a"), ("a", INF)], above={"⊥": CHAIN})
    return OmegaSpace(order, (
        SchemaTemplate(fixed_fin={INF, "a", "⊥"}, tail_from=0),
        SchemaTemplate(fixed_fin={INF}),
        SchemaTemplate(param="up"),
        SchemaTemplate(fixed_fin={INF}, param="up"),
        SchemaTemplate(fixed_fin={INF, "a"}, param="up"),
    ), True, "E")


BUNDLED = {
    "beta": beta,
    "gamma": gamma,
    "delta": delta,
    "scott_omega_plus_one": scott_omega_plus_one,
    "E": example_E,
}


@dataclass(frozen=True)
class Constraint:
    """Open sets meeting ``trigger`` must contain ``required`` and, if
    ``needs_tail``, a chain tail."""
    trigger: SchematicSet
    required: SchematicSet = EMPTY
    needs_tail: bool = False


@dataclass(frozen=True, eq=False)
class ConstraintTopology(Handle):
    order: OmegaOrder
    constraints: tuple = ()
    name: str = "constrained"

    @property
    def bound(self) -> int:
        consts = [c.trigger.bound for c in self.constraints] + [c.required.bound for c in self.constraints]
        return max([self.order.bound] + consts) + 1

    def is_open(self, U: SchematicSet) -> bool:
        if not self.order.is_up_set(U):
            return False
        for c in self.constraints:
            if not (U & c.trigger).is_empty:
                if not c.required.issubset(U) or (c.needs_tail and not U.has_tail):
                    return False
        return True

    def _closure(self, start: SchematicSet, m: int | None):
        S = self.order.up_set(start)
        while True:
            grown = S
            for c in self.constraints:
                if not (grown & c.trigger).is_empty:
                    grown = grown | self.order.up_set(c.required)
                    if c.needs_tail and not grown.has_tail:
                        if m is None:
                            return None
                        grown = grown | self.order.up_set(SchematicSet(tail=m))
            if grown == S:
                return S
            S = grown

    def nbhds(self, x: Point, W: int) -> list[SchematicSet]:
        start = SchematicSet.of([x])
        smallest = self._closure(start, None)
        if smallest is not None:
            return [smallest]
        return [self._closure(start, m) for m in range(W + 2)]
