"""Finitely described subsets and nets of a space ``F + N``.

Points are either labels of the finite part (strings) or chain points
(non-negative ints).  A chain part is a finite set together with an optional
tail ``[t, oo)``, so every schematic set meets the chain in a finite or a
cofinite set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

Point = Union[str, int]


def is_chain_point(p) -> bool:
    return isinstance(p, int) and not isinstance(p, bool)


@dataclass(frozen=True)
class SchematicSet:
    fin: frozenset = frozenset()
    chain: frozenset = frozenset()
    tail: int | None = None

    def __post_init__(self):
        fin = frozenset(self.fin)
        chain = frozenset(self.chain)
        tail = self.tail
        if any(n < 0 for n in chain) or (tail is not None and tail < 0):
            raise ValueError("chain points are non-negative")
        if tail is not None:
            while tail - 1 in chain:
                tail -= 1
            chain = frozenset(n for n in chain if n < tail)
        object.__setattr__(self, "fin", fin)
        object.__setattr__(self, "chain", chain)
        object.__setattr__(self, "tail", tail)

    @classmethod
    def of(cls, points: Iterable[Point] = (), tail: int | None = None) -> "SchematicSet":
        points = list(points)
        return cls(frozenset(p for p in points if not is_chain_point(p)),
                   frozenset(p for p in points if is_chain_point(p)), tail)

    @classmethod
    def chain_from(cls, t: int) -> "SchematicSet":
        return cls(tail=t)

    def __contains__(self, p: Point) -> bool:
        if is_chain_point(p):
            return p in self.chain or (self.tail is not None and p >= self.tail)
        return p in self.fin

    @property
    def is_empty(self) -> bool:
        return not self.fin and not self.chain and self.tail is None

    @property
    def has_tail(self) -> bool:
        return self.tail is not None

    @property
    def chain_empty(self) -> bool:
        return not self.chain and self.tail is None

    @property
    def bound(self) -> int:
        """One past every constant mentioned by the set."""
        consts = list(self.chain) + ([self.tail] if self.tail is not None else [])
        return max(consts, default=-1) + 1

    def chain_points(self, upto: int) -> list[int]:
        return [n for n in range(upto + 1) if n in self]

    def __or__(self, other: "SchematicSet") -> "SchematicSet":
        tails = [t for t in (self.tail, other.tail) if t is not None]
        return SchematicSet(self.fin | other.fin, self.chain | other.chain, min(tails) if tails else None)

    def __and__(self, other: "SchematicSet") -> "SchematicSet":
        chain = {n for n in self.chain | other.chain if n in self and n in other}
        tail = None
        if self.tail is not None and other.tail is not None:
            tail = max(self.tail, other.tail)
        return SchematicSet(self.fin & other.fin, frozenset(chain), tail)

    def complement(self, fin_universe: Iterable[str]) -> "SchematicSet":
        fin = frozenset(fin_universe) - self.fin
        if self.tail is None:
            top = max(self.chain, default=-1) + 1
            return SchematicSet(fin, frozenset(n for n in range(top) if n not in self.chain), top)
        return SchematicSet(fin, frozenset(n for n in range(self.tail) if n not in self.chain), None)

    def __sub__(self, other: "SchematicSet") -> "SchematicSet":
        return self & other.complement(self.fin)

    def issubset(self, other: "SchematicSet") -> bool:
        if not self.fin <= other.fin:
            return False
        if self.tail is not None and other.tail is None:
            return False
        upto = max(self.bound, other.bound)
        return all(n in other for n in range(upto + 1) if n in self)

    def __le__(self, other: "SchematicSet") -> bool:
        return self.issubset(other)

    def points(self, upto: int) -> list[Point]:
        """Finite members plus chain members up to ``upto``."""
        return sorted(self.fin, key=str) + self.chain_points(upto)

    def describe(self) -> str:
        parts = [str(x) for x in sorted(self.fin, key=str)] + [str(n) for n in sorted(self.chain)]
        if self.tail is not None:
            parts.append(f"{self.tail}..")
        return "{" + ", ".join(parts) + "}"

    def __repr__(self) -> str:
        return f"SchematicSet{self.describe()}"


EMPTY = SchematicSet()
CHAIN = SchematicSet(tail=0)


@dataclass(frozen=True)
class Ramp:
    """The chain point ``step * q + offset`` at the ``q``-th visit."""
    step: int
    offset: int = 0

    def __post_init__(self):
        if self.step < 1 or self.offset < 0:
            raise ValueError("ramps need step >= 1 and offset >= 0")

    def at(self, q: int) -> int:
        return self.step * q + self.offset


@dataclass(frozen=True)
class SchematicNet:
    """A sequence interleaving ``len(residues)`` sub-sequences.

    Index ``i`` takes the value of residue ``i % k`` at visit ``i // k``; a
    residue is either a fixed point or a :class:`Ramp`.
    """
    residues: tuple

    def __post_init__(self):
        if not self.residues:
            raise ValueError("a net needs at least one residue")
        object.__setattr__(self, "residues", tuple(self.residues))

    @property
    def k(self) -> int:
        return len(self.residues)

    def at(self, i: int) -> Point:
        r = self.residues[i % self.k]
        return r.at(i // self.k) if isinstance(r, Ramp) else r

    @property
    def fixed_points(self) -> list[Point]:
        return [r for r in self.residues if not isinstance(r, Ramp)]

    @property
    def ramps(self) -> list[Ramp]:
        return [r for r in self.residues if isinstance(r, Ramp)]

    @property
    def bound(self) -> int:
        consts = [p for p in self.fixed_points if is_chain_point(p)]
        consts += [r.offset for r in self.ramps]
        return max(consts, default=-1) + 1

    def eventually_in(self, S: SchematicSet) -> bool:
        """A ramp is eventually inside ``S`` only when ``S`` contains a chain tail."""
        if any(p not in S for p in self.fixed_points):
            return False
        return not self.ramps or S.has_tail

    def describe(self) -> str:
        def one(r):
            if isinstance(r, Ramp):
                return f"{r.step if r.step != 1 else ''}n" + (f"+{r.offset}" if r.offset else "")
            return str(r)
        return "(" + ", ".join(one(r) for r in self.residues) + ")"


def constant(p: Point) -> SchematicNet:
    return SchematicNet((p,))


def ramp(step: int = 1, offset: int = 0) -> SchematicNet:
    return SchematicNet((Ramp(step, offset),))


def alternating(p: Point, step: int = 2, offset: int = 0) -> SchematicNet:
    return SchematicNet((p, Ramp(step, offset)))
