"""Finite preorders and posets.

Subsets of a ground set are plain ``int`` bitmasks: bit ``i`` is set when the
``i``-th element (in declaration order) is a member.  The order relation is a
read-only numpy boolean matrix, fully closed at construction, plus cached
up/down masks so that every query is a couple of bit operations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Hashable, Iterable, Iterator, Sequence

import numpy as np

from .errors import AntisymmetryViolation, DuplicateLabel

Label = Hashable


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def mask_from(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << int(i)
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True, eq=False)
class FinitePoset:
    elements: tuple
    leq: np.ndarray
    partial: bool
    index: dict = field(repr=False)
    up: tuple = field(repr=False)
    down: tuple = field(repr=False)

    @property
    def n(self) -> int:
        return len(self.elements)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def le(self, i: int, j: int) -> bool:
        return bool(self.leq[i, j])

    def le_labels(self, a: Label, b: Label) -> bool:
        return bool(self.leq[self.index[a], self.index[b]])

    def mask(self, labels: Iterable[Label]) -> int:
        return mask_from(self.index[x] for x in labels)

    def labels(self, mask: int) -> tuple:
        return tuple(self.elements[i] for i in bits(mask))

    def up_set(self, mask: int) -> int:
        out = 0
        for i in bits(mask):
            out |= self.up[i]
        return out

    def down_set(self, mask: int) -> int:
        out = 0
        for i in bits(mask):
            out |= self.down[i]
        return out

    def upper_bounds(self, mask: int) -> int:
        out = self.full
        for i in bits(mask):
            out &= self.up[i]
        return out

    def lower_bounds(self, mask: int) -> int:
        out = self.full
        for i in bits(mask):
            out &= self.down[i]
        return out

    def equivalence_class(self, i: int) -> int:
        return self.up[i] & self.down[i]

    def pairs(self) -> list[tuple]:
        """All strict-or-equal related pairs ``(a, b)`` with ``a != b``."""
        return [(self.elements[i], self.elements[j])
                for i in range(self.n) for j in range(self.n)
                if i != j and self.leq[i, j]]

    def __eq__(self, other) -> bool:
        return (isinstance(other, FinitePoset) and self.elements == other.elements
                and np.array_equal(self.leq, other.leq))

    def __hash__(self) -> int:
        return hash((self.elements, self.leq.tobytes()))


def _close(rel: np.ndarray) -> np.ndarray:
    rel = rel.copy()
    np.fill_diagonal(rel, True)
    for k in range(rel.shape[0]):
        rel |= np.outer(rel[:, k], rel[k, :])
    return rel


def poset_from_matrix(elements: Sequence[Label], leq: np.ndarray, partial: bool | None = None) -> FinitePoset:
    """Wrap an already reflexive-transitive matrix.  ``partial`` defaults to antisymmetry."""
    elements = tuple(elements)
    leq = np.array(leq, dtype=bool)
    n = len(elements)
    antisym = not np.any(leq & leq.T & ~np.eye(n, dtype=bool))
    if partial is None:
        partial = antisym
    elif partial and not antisym:
        raise AntisymmetryViolation("relation is not antisymmetric")
    leq.setflags(write=False)
    up = tuple(mask_from(np.flatnonzero(leq[i, :])) for i in range(n))
    down = tuple(mask_from(np.flatnonzero(leq[:, i])) for i in range(n))
    return FinitePoset(elements, leq, partial, {x: i for i, x in enumerate(elements)}, up, down)


def build_poset(elements: Sequence[Label], pairs: Iterable[tuple] = (), mode: str = "partial") -> FinitePoset:
    """Reflexive-transitive closure of ``pairs`` over ``elements``.

    ``mode`` is ``"partial"`` (reject cycles) or ``"pre"``.
    """
    if mode not in ("partial", "pre"):
        raise ValueError(f"mode must be 'partial' or 'pre', not {mode!r}")
    elements = tuple(elements)
    index: dict = {}
    for i, x in enumerate(elements):
        if x in index:
            raise DuplicateLabel(f"duplicate label {x!r}")
        index[x] = i
    n = len(elements)
    rel = np.zeros((n, n), dtype=bool)
    for a, b in pairs:
        rel[index[a], index[b]] = True
    rel = _close(rel)
    if mode == "partial":
        bad = np.argwhere(rel & rel.T & ~np.eye(n, dtype=bool))
        if len(bad):
            i, j = bad[0]
            raise AntisymmetryViolation(f"{elements[i]!r} <= {elements[j]!r} <= {elements[i]!r}")
    return poset_from_matrix(elements, rel, partial=(mode == "partial"))


def chain(n: int) -> FinitePoset:
    return build_poset(range(n), [(i, i + 1) for i in range(n - 1)])


def antichain(labels: Sequence[Label]) -> FinitePoset:
    return build_poset(labels, [])


def cut(P: FinitePoset, S: int) -> int:
    """Lower bounds of the upper bounds of ``S``."""
    return P.lower_bounds(P.upper_bounds(S))


def is_directed(P: FinitePoset, S: int) -> bool:
    if S == 0:
        return False
    members = list(bits(S))
    for a, b in combinations(members, 2):
        if P.up[a] & P.up[b] & S == 0:
            return False
    return True


def sup(P: FinitePoset, S: int):
    """Least upper bound of ``S`` as a label, or ``None``.

    In a preorder several elements may be least; the first in declaration
    order is returned.
    """
    ub = P.upper_bounds(S)
    for i in bits(ub):
        if ub & ~P.up[i] == 0:
            return P.elements[i]
    return None


def is_monotone(P: FinitePoset, Q: FinitePoset, table: Sequence[int]) -> bool:
    for i in range(P.n):
        for j in bits(P.up[i]):
            if not Q.leq[table[i], table[j]]:
                return False
    return True


def enumerate_monotone(P: FinitePoset, Q: FinitePoset) -> Iterator[tuple]:
    """Order-preserving maps ``P -> Q`` as tuples of target indices.

    Lexicographic order on the tables, so the stream is reproducible.
    """
    n = P.n
    table = [0] * n
    # constraints against already-assigned points only
    below = [[j for j in range(i) if P.leq[j, i]] for i in range(n)]
    above = [[j for j in range(i) if P.leq[i, j]] for i in range(n)]

    def extend(i: int):
        if i == n:
            yield tuple(table)
            return
        for v in range(Q.n):
            if all(Q.leq[table[j], v] for j in below[i]) and all(Q.leq[v, table[j]] for j in above[i]):
                table[i] = v
                yield from extend(i + 1)

    yield from extend(0)


def enumerate_directed_subsets(P: FinitePoset) -> Iterator[int]:
    """All directed subsets, as masks in increasing numeric order.

    A finite directed set has an element above all its members, so every
    directed set lies in ``down[m]`` for one of its own members ``m``.
    """
    found = set()
    for m in range(P.n):
        rest = P.down[m] & ~(1 << m)
        sub = rest
        while True:
            found.add(sub | (1 << m))
            if sub == 0:
                break
            sub = (sub - 1) & rest
    yield from sorted(found)


def top_class(P: FinitePoset, S: int) -> int:
    """Members of ``S`` lying above every member of ``S`` (empty if none)."""
    out = 0
    for i in bits(S):
        if S & ~P.down[i] == 0:
            out |= 1 << i
    return out


def is_chain(P: FinitePoset, S: int) -> bool:
    members = list(bits(S))
    return all(P.leq[a, b] or P.leq[b, a] for a, b in combinations(members, 2))
