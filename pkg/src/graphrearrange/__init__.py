"""Discrete rearrangements on graphs and isoperimetric audits of vertex orderings."""

from .graph import Family, Graph, GraphError, WindowError, build, edge_boundary, vertex_boundary
from .orderings import Ordering, OrderingError, containment_index, named_ordering
from .rearrange import LatticeFunction, grad_lp_norm, lp_norm, rearrange
from .isoperimetry import Kind, min_edge_boundary, min_vertex_boundary, profile
from .audit import l2_counterexample, polya_szego_check

__version__ = "0.1.0"
