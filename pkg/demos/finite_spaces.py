"""Finite spaces: enumeration, specialization orders and the six refinements.

Every finite space is Alexandroff, so each refinement hands it back unchanged.
The interesting part on finite spaces is the transfinite closure: start from a
set, repeatedly add limits of class nets, and land on the topological closure.
"""

from convspace.convergence import OPERATORS, closure_transfinite, coreflect, directed
from convspace.order import bits, build_poset, cut, enumerate_directed_subsets
from convspace.spacefile import to_dot
from convspace.topology import enumerate_topologies, from_preorder, spaces_up_to

for n in range(1, 5):
    print(f"{n} points: {len(enumerate_topologies(n))} topologies, "
          f"{len(enumerate_topologies(n, t0=True))} of them T0 (up to homeomorphism)")

fixed = sum(coreflect(X, w) == X for X in spaces_up_to(4, t0=False) for w in OPERATORS)
print(f"refinements that changed a space with at most 4 points: {len(OPERATORS) * len(spaces_up_to(4, t0=False)) - fixed}")

diamond = build_poset(["⊥", "a", "b", "⊤"], [("⊥", "a"), ("⊥", "b"), ("a", "⊤"), ("b", "⊤")])
print(to_dot(from_preorder(diamond), "diamond"))

# the largest class allowed: every directed set converges to everything in its cut
cls = [(directed(D), x) for D in enumerate_directed_subsets(diamond) for x in bits(cut(diamond, D))]
F = diamond.mask(["a"])
stages, star = closure_transfinite(diamond, cls, F)
print("stages from {a}:", [diamond.labels(s) for s in stages])
print("closure:", diamond.labels(star))
