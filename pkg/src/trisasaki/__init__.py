"""Exact-arithmetic homogeneous 3-(alpha,delta)-Sasaki models and their verification suite."""

from .scalars import EXACT, FLOAT, Q2, SQRT2, q2
from .liealg import Grading, LieAlgebra, from_matrix_basis

__all__ = [
    "EXACT",
    "FLOAT",
    "Q2",
    "SQRT2",
    "q2",
    "Grading",
    "LieAlgebra",
    "from_matrix_basis",
]
