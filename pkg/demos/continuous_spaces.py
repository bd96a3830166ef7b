"""Continuous spaces and nets whose eventual lower bounds converge.

Scott ω+1 is continuous and the class agrees with convergence on every test
net.  In E the net alternating between a and the even numbers converges to a,
yet nothing below it converges there, so the class is not topological.
"""

from convspace.cspace import (eventual_lower_bounds, in_s_class, is_c_space, s_class_topological,
                              s_topology)
from convspace.omega import alternating, compare, converges, coreflect_omega, example_E, scott_omega_plus_one

for space in (scott_omega_plus_one(), example_E()):
    verdict = is_c_space(space)
    where = "" if verdict else f" (fails at {verdict.point} inside {verdict.neighbourhood.describe()})"
    print(f"{space.name}: continuous = {bool(verdict)}{where}")
    print(f"  class topology vs directed refinement: {compare(s_topology(space), coreflect_omega(space, 'D'))[0]}")
    print(f"  verdict over the test nets: {s_class_topological(space).status}")

E = example_E()
net = alternating("a")
print("net", net.describe(), "converges to a:", converges(E, net, "a"))
print("eventual lower bounds:", eventual_lower_bounds(E, net).describe())
print("in the class:", in_s_class(E, net, "a"))
