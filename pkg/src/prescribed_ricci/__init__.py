"""Prescribed Ricci curvature on homogeneous spaces with two isotropy summands."""
from . import generic_prp, lie_core, polyroots, registry, so17_prp
from ._types import PhiParams, PhiSqrtParams, RicTriple, TensorTriple
from .generic_prp import NotInImage, TwoSummandParams, analyze_cT, ric_diag, solve_T
from .lie_core import ric_oracle, structure_sums
from .registry import lookup
from .so17_prp import region_contains, region_oracle, ric_abc, ric_xyz, solve_cT_so17, solve_T_so17

__version__ = "0.1.0"
