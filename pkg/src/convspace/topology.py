"""Finite topological spaces.

A finite topology is closed under arbitrary intersections, so each point has a
least open neighbourhood.  ``FiniteTopology`` stores exactly those minimal
neighbourhoods (one bitmask per point); the open family is recovered on
demand as the sets containing the minimal neighbourhood of each of their
points.  Two topologies on the same ground are equal iff the neighbourhood
vectors agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product as cartesian
from typing import Hashable, Iterable, Iterator, Sequence

import numpy as np

from .errors import DuplicateLabel, NotATopology, SizeCap
from .order import (FinitePoset, bits, enumerate_directed_subsets, mask_from,
                    poset_from_matrix, sup as poset_sup)

# explicit open-family enumeration is refused beyond this many points
OPEN_FAMILY_CAP = 12


@dataclass(frozen=True)
class FiniteTopology:
    ground: tuple
    nbhd: tuple

    @property
    def n(self) -> int:
        return len(self.ground)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def index(self) -> dict:
        return {x: i for i, x in enumerate(self.ground)}

    def mask(self, labels: Iterable[Hashable]) -> int:
        idx = self.index
        return mask_from(idx[x] for x in labels)

    def labels(self, mask: int) -> tuple:
        return tuple(self.ground[i] for i in bits(mask))

    def is_open(self, mask: int) -> bool:
        return all(self.nbhd[i] & ~mask == 0 for i in bits(mask))

    def interior(self, mask: int) -> int:
        return mask_from(i for i in range(self.n) if self.nbhd[i] & ~mask == 0)

    def closure(self, mask: int) -> int:
        return mask_from(i for i in range(self.n) if self.nbhd[i] & mask)

    def opens(self, cap: int | None = None) -> list[int]:
        """Sorted list of all open masks."""
        cap = OPEN_FAMILY_CAP if cap is None else cap
        if self.n > cap:
            raise SizeCap(f"{self.n} points exceeds the open-family cap of {cap}")
        family = {0}
        for u in self.nbhd:
            family |= {v | u for v in family}
        return sorted(family)

    def specialization(self) -> FinitePoset:
        return specialization(self)


def nbhds_from_family(n: int, family: Iterable[int]) -> tuple:
    full = (1 << n) - 1
    nb = [full] * n
    for u in family:
        for i in bits(u):
            nb[i] &= u
    return tuple(nb)


def _check_ground(ground: Sequence) -> tuple:
    ground = tuple(ground)
    if len(set(ground)) != len(ground):
        raise DuplicateLabel("duplicate point label")
    return ground


def _as_mask(ground: tuple, index: dict, u) -> int:
    if isinstance(u, int):
        if u >> len(ground):
            raise NotATopology(f"mask {u:#b} wider than the ground set")
        return u
    return mask_from(index[x] for x in u)


def make_topology(ground: Sequence, opens: Iterable, complete: bool = False) -> FiniteTopology:
    """Validate ``opens`` (masks or label collections) as a topology on ``ground``.

    With ``complete=True`` the family is instead closed under finite unions and
    intersections and extended by the empty set and the whole ground.
    """
    ground = _check_ground(ground)
    if len(ground) > OPEN_FAMILY_CAP:
        raise SizeCap(f"{len(ground)} points exceeds the open-family cap of {OPEN_FAMILY_CAP}")
    index = {x: i for i, x in enumerate(ground)}
    fam = {_as_mask(ground, index, u) for u in opens}
    full = (1 << len(ground)) - 1
    if complete:
        fam |= {0, full}
        changed = True
        while changed:
            changed = False
            cur = list(fam)
            for a in cur:
                for b in cur:
                    for c in (a | b, a & b):
                        if c not in fam:
                            fam.add(c)
                            changed = True
    else:
        if 0 not in fam:
            raise NotATopology("empty set is not open")
        if full not in fam:
            raise NotATopology("ground set is not open")
        ordered = sorted(fam)
        for k, a in enumerate(ordered):
            for b in ordered[k + 1:]:
                if a | b not in fam:
                    raise NotATopology("union of opens is missing",
                                       (tuple(ground[i] for i in bits(a)), tuple(ground[i] for i in bits(b))))
                if a & b not in fam:
                    raise NotATopology("intersection of opens is missing",
                                       (tuple(ground[i] for i in bits(a)), tuple(ground[i] for i in bits(b))))
    return FiniteTopology(ground, nbhds_from_family(len(ground), fam))


def from_nbhds(ground: Sequence, nbhd: Sequence[int]) -> FiniteTopology:
    """Build from minimal neighbourhoods; they must be reflexive and transitive."""
    ground = _check_ground(ground)
    nbhd = tuple(nbhd)
    for i, u in enumerate(nbhd):
        if not (u >> i) & 1:
            raise NotATopology(f"{ground[i]!r} is not in its own neighbourhood")
        for j in bits(u):
            if nbhd[j] & ~u:
                raise NotATopology(f"neighbourhood of {ground[i]!r} is not open")
    return FiniteTopology(ground, nbhd)


def from_edges(ground: Sequence, succ: Sequence[int]) -> FiniteTopology:
    """Topology whose opens are the sets closed under the edges ``i -> succ[i]``."""
    n = len(succ)
    nb = [succ[i] | (1 << i) for i in range(n)]
    changed = True
    while changed:
        changed = False
        for i in range(n):
            acc = nb[i]
            for j in bits(nb[i]):
                acc |= nb[j]
            if acc != nb[i]:
                nb[i] = acc
                changed = True
    return FiniteTopology(_check_ground(ground), tuple(nb))


def from_preorder(P: FinitePoset) -> FiniteTopology:
    """Alexandroff topology: opens are the up-sets."""
    return FiniteTopology(P.elements, P.up)


def discrete(ground: Sequence) -> FiniteTopology:
    return FiniteTopology(_check_ground(ground), tuple(1 << i for i in range(len(ground))))


def indiscrete(ground: Sequence) -> FiniteTopology:
    full = (1 << len(ground)) - 1
    return FiniteTopology(_check_ground(ground), (full,) * len(ground))


def sierpinski() -> FiniteTopology:
    return FiniteTopology(("⊥", "⊤"), (0b11, 0b10))


def one_point(label="*") -> FiniteTopology:
    return FiniteTopology((label,), (1,))


def specialization(T: FiniteTopology) -> FinitePoset:
    """``x <= y`` iff every open containing ``x`` contains ``y``."""
    n = T.n
    leq = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in bits(T.nbhd[i]):
            leq[i, j] = True
    return poset_from_matrix(T.ground, leq)


def is_T0(T: FiniteTopology) -> bool:
    return len(set(T.nbhd)) == T.n


def order_topology(P: FinitePoset, kind: str) -> FiniteTopology:
    """Alexandroff, upper or Scott topology of a finite order, each from its definition."""
    if kind == "alexandroff":
        return from_preorder(P)
    if kind == "upper":
        # subbase: complements of principal down-sets
        subbase = [P.full & ~P.down[y] for y in range(P.n)]
        return FiniteTopology(P.elements, nbhds_from_family(P.n, subbase))
    if kind == "scott":
        directed = list(enumerate_directed_subsets(P))
        sups = []
        for D in directed:
            s = poset_sup(P, D)
            if s is not None:
                sups.append((D, P.index[s]))
        opens = []
        for U in from_preorder(P).opens(cap=max(P.n, OPEN_FAMILY_CAP)):
            if all(D & U for D, s in sups if (U >> s) & 1):
                opens.append(U)
        return FiniteTopology(P.elements, nbhds_from_family(P.n, opens))
    raise ValueError(f"unknown order topology {kind!r}")


def continuous(f: Sequence[int], X: FiniteTopology, Y: FiniteTopology) -> bool:
    """``f`` is a table of target indices.  Checked on minimal neighbourhoods."""
    for i in range(X.n):
        target = Y.nbhd[f[i]]
        for j in bits(X.nbhd[i]):
            if not (target >> f[j]) & 1:
                return False
    return True


def preimage(f: Sequence[int], mask: int) -> int:
    return mask_from(i for i, v in enumerate(f) if (mask >> v) & 1)


def continuous_by_opens(f: Sequence[int], X: FiniteTopology, Y: FiniteTopology) -> bool:
    """Literal definition: preimage of every open is open.  Slow, used as an oracle."""
    return all(X.is_open(preimage(f, U)) for U in Y.opens(cap=64))


def product(X: FiniteTopology, Y: FiniteTopology) -> FiniteTopology:
    """Product space on ``X.ground x Y.ground`` in row-major order."""
    ground = tuple((a, b) for a in X.ground for b in Y.ground)
    m = Y.n
    nb = []
    for i in range(X.n):
        for j in range(Y.n):
            u = 0
            for a in bits(X.nbhd[i]):
                for b in bits(Y.nbhd[j]):
                    u |= 1 << (a * m + b)
            nb.append(u)
    return FiniteTopology(ground, tuple(nb))


def final_topology(ground: Sequence, probes: Iterable[tuple]) -> FiniteTopology:
    """Finest topology on ``ground`` making every ``(source, table)`` probe continuous.

    ``U`` is open iff each preimage is open, i.e. iff ``U`` is closed under the
    edges ``k(s) -> k(s')`` for ``s'`` in the minimal neighbourhood of ``s``.
    """
    ground = _check_ground(ground)
    succ = [0] * len(ground)
    for src, k in probes:
        for s in range(src.n):
            for t in bits(src.nbhd[s]):
                succ[k[s]] |= 1 << k[t]
    return from_edges(ground, succ)


def final_topology_by_subsets(ground: Sequence, probes: Sequence[tuple]) -> FiniteTopology:
    """Brute-force version of :func:`final_topology` over all subsets."""
    ground = _check_ground(ground)
    fam = [U for U in range(1 << len(ground))
           if all(src.is_open(preimage(k, U)) for src, k in probes)]
    return FiniteTopology(ground, nbhds_from_family(len(ground), fam))


def relabel(T: FiniteTopology, ground: Sequence) -> FiniteTopology:
    return FiniteTopology(_check_ground(ground), T.nbhd)


def is_finer(T1: FiniteTopology, T2: FiniteTopology) -> bool:
    """Every open of ``T2`` is open in ``T1``."""
    return all(T1.nbhd[i] & ~T2.nbhd[i] == 0 for i in range(T1.n))


def canonical_form(T: FiniteTopology) -> tuple:
    """Isomorphism invariant: lexicographically least relation matrix over all relabellings."""
    n = T.n
    if n > 8:
        raise SizeCap("canonical form is limited to 8 points")
    rel = [[(T.nbhd[i] >> j) & 1 for j in range(n)] for i in range(n)]
    best = None
    for perm in permutations(range(n)):
        key = tuple(rel[perm[i]][perm[j]] for i in range(n) for j in range(n))
        if best is None or key < best:
            best = key
    return (n, best)


def homeomorphism(X: FiniteTopology, Y: FiniteTopology):
    """A bijection (tuple of indices) preserving minimal neighbourhoods, or ``None``."""
    if X.n != Y.n:
        return None
    n = X.n
    rx = [[(X.nbhd[i] >> j) & 1 for j in range(n)] for i in range(n)]
    ry = [[(Y.nbhd[i] >> j) & 1 for j in range(n)] for i in range(n)]
    sig_x = [(sum(r), sum(rx[j][i] for j in range(n))) for i, r in enumerate(rx)]
    sig_y = [(sum(r), sum(ry[j][i] for j in range(n))) for i, r in enumerate(ry)]
    image = [-1] * n
    used = [False] * n

    def extend(i):
        if i == n:
            return True
        for v in range(n):
            if used[v] or sig_x[i] != sig_y[v]:
                continue
            if all(rx[i][j] == ry[v][image[j]] and rx[j][i] == ry[image[j]][v] for j in range(i)):
                image[i] = v
                used[v] = True
                if extend(i + 1):
                    return True
                used[v] = False
        return False

    return tuple(image) if extend(0) else None


def homeomorphic(X: FiniteTopology, Y: FiniteTopology) -> bool:
    return homeomorphism(X, Y) is not None


def enumerate_preorders(n: int) -> Iterator[np.ndarray]:
    """Every reflexive transitive relation on ``range(n)``."""
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    for choice in cartesian((False, True), repeat=len(off)):
        rel = np.eye(n, dtype=bool)
        for (i, j), c in zip(off, choice):
            rel[i, j] = c
        if np.array_equal(rel, rel | (rel.astype(np.uint8) @ rel.astype(np.uint8) > 0)):
            yield rel


def enumerate_topologies(n: int, t0: bool = False, up_to_iso: bool = True) -> list[FiniteTopology]:
    """All topologies on ``n`` points labelled ``0..n-1``.

    Finite topologies correspond one to one with preorders (via the
    specialization order), which is how they are generated.
    """
    out = []
    seen = set()
    for rel in enumerate_preorders(n):
        if t0 and np.any(rel & rel.T & ~np.eye(n, dtype=bool)):
            continue
        T = FiniteTopology(tuple(range(n)), tuple(mask_from(np.flatnonzero(rel[i])) for i in range(n)))
        if up_to_iso:
            key = canonical_form(T)
            if key in seen:
                continue
            seen.add(key)
        out.append(T)
    return out


def enumerate_topologies_brute(n: int) -> list[FiniteTopology]:
    """All topologies on ``n`` labelled points by filtering every family of subsets.

    Only feasible for ``n <= 3``; used to cross-check :func:`enumerate_topologies`.
    """
    full = (1 << n) - 1
    middle = list(range(1, full))
    out = []
    for pick in range(1 << len(middle)):
        fam = {0, full} | {middle[k] for k in range(len(middle)) if (pick >> k) & 1}
        if all((a | b) in fam and (a & b) in fam for a in fam for b in fam):
            out.append(FiniteTopology(tuple(range(n)), nbhds_from_family(n, fam)))
    return out


def spaces_up_to(n: int, t0: bool = True) -> list[FiniteTopology]:
    """Iso-reduced spaces with 1..n points."""
    out = []
    for k in range(1, n + 1):
        out.extend(enumerate_topologies(k, t0=t0))
    return out
