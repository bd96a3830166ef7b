"""Countable spaces built from finitely many points plus one chain.

Walks through the bundled examples and shows which open sets the directed
refinements add.
"""

from convspace.omega import (INF, SchematicSet, beta, compare, coreflect_omega, delta, example_E,
                             gamma, has_upper_bound, omega, omega_plus_one, order_topology_omega,
                             truncate, CHAIN)
from convspace.topology import specialization

E = example_E()
print("E fixed by D:", compare(coreflect_omega(E, "D"), E)[0])
pair = SchematicSet.of([INF, "a"])
print("{∞, a} open in E:", E.is_open(pair), "| in D'(E):", coreflect_omega(E, "D'").is_open(pair))

for space in (beta(), gamma(), delta()):
    for which in ("D", "D'"):
        rel, witness = compare(coreflect_omega(space, which), space)
        extra = f" (for instance {witness.describe()})" if witness is not None else ""
        print(f"{which}({space.name}) vs {space.name}: {rel}{extra}")

top = omega_plus_one()
for kind in ("alexandroff", "upper", "weak_scott"):
    rel, _ = compare(order_topology_omega(top, kind), order_topology_omega(top, "scott"))
    print(f"ω+1: {kind} vs scott: {rel}")

print("ℕ bounded in ω:", has_upper_bound(omega(), CHAIN), "| in ω+1:", has_upper_bound(omega_plus_one(), CHAIN))

T = truncate(beta(), 3)
print("beta cut down to", T.ground, "has order", specialization(T).pairs())
