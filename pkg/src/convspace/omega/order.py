"""Orders on ``F + N``: a finite poset, the chain (ordered or an antichain), and
for each finite point the chain points below and above it."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from ..errors import NotDirected, OrderInconsistent
from ..order import FinitePoset, build_poset
from .sets import CHAIN, EMPTY, Point, SchematicSet, is_chain_point


def _only_chain(S: SchematicSet) -> SchematicSet:
    return SchematicSet(frozenset(), S.chain, S.tail)


@dataclass(frozen=True, eq=False)
class OmegaOrder:
    fin: FinitePoset
    chain_ordered: bool
    below: dict = field(default_factory=dict)  # f -> chain points n with n <= f
    above: dict = field(default_factory=dict)  # f -> chain points n with f <= n

    def __post_init__(self):
        below = {f: _only_chain(self.below.get(f, EMPTY)) for f in self.fin.elements}
        above = {f: _only_chain(self.above.get(f, EMPTY)) for f in self.fin.elements}
        if self.chain_ordered:
            for f in below:
                below[f] = _down_close(below[f])
                above[f] = _up_close(above[f])
        # monotone along the finite order
        changed = True
        while changed:
            changed = False
            for f in self.fin.elements:
                for g in self.fin.elements:
                    if f != g and self.fin.le_labels(f, g):
                        nb = below[g] | below[f]
                        na = above[f] | above[g]
                        if nb != below[g] or na != above[f]:
                            below[g], above[f] = nb, na
                            changed = True
        object.__setattr__(self, "below", below)
        object.__setattr__(self, "above", above)
        self._validate()

    def _validate(self) -> None:
        for f in self.fin.elements:
            lo, hi = self.below[f], self.above[f]
            if not (lo & hi).chain_empty:
                raise OrderInconsistent(f"chain point both below and above {f!r}")
            if not lo.chain_empty and not hi.chain_empty:
                if not self.chain_ordered:
                    raise OrderInconsistent(f"{f!r} sits between two incomparable chain points")
                if lo.has_tail or max(lo.chain) >= min(hi.chain | ({hi.tail} if hi.tail is not None else set())):
                    raise OrderInconsistent(f"chain points below {f!r} are not below those above it")
            for g in self.fin.elements:
                if f != g and not (self.above[f] & self.below[g]).chain_empty and not self.fin.le_labels(f, g):
                    raise OrderInconsistent(f"{f!r} <= n <= {g!r} for some n but not {f!r} <= {g!r}")

    @property
    def fin_labels(self) -> tuple:
        return self.fin.elements

    @property
    def bound(self) -> int:
        return max([s.bound for s in self.below.values()] + [s.bound for s in self.above.values()], default=0)

    def leq(self, p: Point, q: Point) -> bool:
        if is_chain_point(p) and is_chain_point(q):
            return p <= q if self.chain_ordered else p == q
        if is_chain_point(p):
            return p in self.below[q]
        if is_chain_point(q):
            return q in self.above[p]
        return self.fin.le_labels(p, q)

    def up(self, p: Point) -> SchematicSet:
        if is_chain_point(p):
            fin = frozenset(g for g in self.fin_labels if p in self.below[g])
            return SchematicSet(fin, frozenset() if self.chain_ordered else frozenset({p}),
                                p if self.chain_ordered else None)
        fin = frozenset(g for g in self.fin_labels if self.fin.le_labels(p, g))
        return SchematicSet(fin, self.above[p].chain, self.above[p].tail)

    def down(self, p: Point) -> SchematicSet:
        if is_chain_point(p):
            fin = frozenset(g for g in self.fin_labels if p in self.above[g])
            return SchematicSet(fin, frozenset(range(p + 1)) if self.chain_ordered else frozenset({p}))
        fin = frozenset(g for g in self.fin_labels if self.fin.le_labels(g, p))
        return SchematicSet(fin, self.below[p].chain, self.below[p].tail)

    def up_set(self, S: SchematicSet) -> SchematicSet:
        out = EMPTY
        for p in S.fin:
            out = out | self.up(p)
        for n in S.chain:
            out = out | self.up(n)
        if S.tail is not None:
            tail = SchematicSet(tail=S.tail)
            fin = frozenset(g for g in self.fin_labels if not (self.below[g] & tail).chain_empty)
            out = out | SchematicSet(fin, tail=S.tail)
        return out

    def down_set(self, S: SchematicSet) -> SchematicSet:
        out = EMPTY
        for p in S.fin:
            out = out | self.down(p)
        for n in S.chain:
            out = out | self.down(n)
        if S.tail is not None:
            tail = SchematicSet(tail=S.tail)
            fin = frozenset(g for g in self.fin_labels if not (self.above[g] & tail).chain_empty)
            out = out | SchematicSet(fin, tail=0 if self.chain_ordered else S.tail)
        return out

    def is_up_set(self, S: SchematicSet) -> bool:
        return self.up_set(S) == S

    def is_down_set(self, S: SchematicSet) -> bool:
        return self.down_set(S) == S

    def upper_bounds(self, S: SchematicSet) -> SchematicSet:
        """Points above every member of ``S``."""
        W = max(self.bound, S.bound) + 1
        fin = frozenset(g for g in self.fin_labels if S.issubset(self.down(g)))
        members = [n for n in range(W + 1) if S.issubset(self.down(n))]
        chain = frozenset(n for n in members if n < W)
        return SchematicSet(fin, chain, W if W in members else None)

    def max_element(self, S: SchematicSet):
        candidates = list(self.fin_labels)
        if not S.has_tail and S.chain:
            candidates += sorted(S.chain)
        for p in candidates:
            if p in S and S.issubset(self.down(p)):
                return p
        return None

    def is_directed(self, S: SchematicSet) -> bool:
        """Either ``S`` has a greatest element, or it contains a chain tail in an
        ordered chain and each of its finite points lies below some chain point."""
        if S.is_empty:
            return False
        if self.max_element(S) is not None:
            return True
        return (self.chain_ordered and S.has_tail
                and all(not self.above[f].chain_empty for f in S.fin))

    def require_directed(self, S: SchematicSet) -> None:
        if not self.is_directed(S):
            raise NotDirected(f"{S.describe()} is not directed")

    def sup_chain(self):
        """Least upper bound of the whole chain, or ``None``."""
        ub = [g for g in self.fin_labels if self.below[g].tail == 0]
        for g in ub:
            if all(self.fin.le_labels(g, h) for h in ub):
                return g
        return None


def _down_close(S: SchematicSet) -> SchematicSet:
    if S.has_tail:
        return CHAIN
    if not S.chain:
        return S
    return SchematicSet(chain=frozenset(range(max(S.chain) + 1)))


def _up_close(S: SchematicSet) -> SchematicSet:
    if S.chain_empty:
        return S
    lo = min(S.chain | ({S.tail} if S.tail is not None else set()))
    return SchematicSet(tail=lo)


def omega_order(fin: Iterable[str] = (), fin_pairs: Iterable[tuple] = (), *,
                chain_ordered: bool = True,
                below: Mapping[str, SchematicSet] | None = None,
                above: Mapping[str, SchematicSet] | None = None) -> OmegaOrder:
    P = build_poset(list(fin), list(fin_pairs), "partial")
    return OmegaOrder(P, chain_ordered, dict(below or {}), dict(above or {}))


def omega() -> OmegaOrder:
    """The natural numbers."""
    return omega_order()


def omega_plus_one() -> OmegaOrder:
    """The natural numbers with a top point ``∞``."""
    return omega_order(["∞"], below={"∞": CHAIN})
