"""Vexillary double beta-Edelman-Greene coefficients as Graham-positive
sums of tableau-indexed monomials, with randomized prime-field verification
of the underlying identities."""

from .shapes import DeltaSeq, Flag, Partition, SkewShape
from .perms import Permutation
from .ring import EvaluationPoint, GrahamMonomial, GrahamSum, SparsePoly
from .tableaux import EnumSpec, RowStrictDecreasingTableau, SetValuedTableau
from .pipeline import j_coefficient, j_of_permutation

__all__ = [
    "DeltaSeq", "Flag", "Partition", "SkewShape", "Permutation",
    "EvaluationPoint", "GrahamMonomial", "GrahamSum", "SparsePoly",
    "EnumSpec", "RowStrictDecreasingTableau", "SetValuedTableau",
    "j_coefficient", "j_of_permutation",
]

__version__ = "0.1.0"
