"""Socle layers, injective resolutions and Ext dimensions for tensor categories
of Mackey Lie algebra modules, computed from Littlewood-Richardson data."""

from .diagrams import DiagramTuple, conjugate, lr_coefficient, multi_lr, seq_lr, sn_dim
from .posets import DegreeVector, leq, level_of, level_sets, one_step, q_max

__version__ = "0.1.0"

__all__ = [
    "DegreeVector",
    "DiagramTuple",
    "conjugate",
    "leq",
    "level_of",
    "level_sets",
    "lr_coefficient",
    "multi_lr",
    "one_step",
    "q_max",
    "seq_lr",
    "sn_dim",
]
