"""Convergence classes, their determined topologies and the coreflections they induce."""

__version__ = "0.1.0"
