"""Countable spaces presented as a finite part plus one ω-chain."""

from .order import OmegaOrder, omega, omega_order, omega_plus_one
from .sets import (CHAIN, EMPTY, Ramp, SchematicNet, SchematicSet, alternating,
                   constant, ramp)
from .space import (BUNDLED, INF, Constraint, ConstraintTopology, CriticalTopology, OmegaSpace,
                    SchemaTemplate,
                    beta, delta, example_E, gamma, scott_omega_plus_one)
from .ops import (compare, converges, coreflect_omega, extract_base,
                  has_upper_bound, is_open, order_topology_omega,
                  specialization, truncate, upper_is_open_literal)
