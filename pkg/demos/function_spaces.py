"""Tensor products and function spaces of finite spaces, and the currying law."""

from itertools import product as cartesian

from convspace.category import check_exponential_law, exponential, hom_set, tensor
from convspace.spacefile import to_json
from convspace.topology import sierpinski, spaces_up_to, specialization

S = sierpinski()
E = exponential(S, S, "D")
print("[S -> S]:", to_json(E))
print("pointwise order:", specialization(E).pairs())
print("S ⊗ S has", tensor(S, S).n, "points and", len(hom_set(tensor(S, S), S)), "maps into S")

small = spaces_up_to(2)
total = 0
for X, Y, Z in cartesian(small, small, small):
    for which in ("D", "D'"):
        total += check_exponential_law(X, Y, Z, which).instances
print(f"currying law holds on every triple of T0 spaces with at most 2 points ({total} checks)")
