from .frac import QZ, Frac, FracZeroDivision, context, neg_q_power, q_of, z_of
from .laurent import LaurentPoly
from .linalg import (
    EchelonSpan,
    InconsistentPayload,
    as_frac,
    bareiss_echelon,
    column_space_basis,
    lcm_denominators,
    rank,
    solve_nullspace,
)
from .polyz import PolyZ
from .ratfunc import RatFunc, RatFuncZeroDivision
from .sparse import SparseMatrix

__all__ = [
    "QZ", "Frac", "FracZeroDivision", "context", "neg_q_power", "q_of", "z_of",
    "LaurentPoly", "EchelonSpan", "InconsistentPayload", "as_frac", "bareiss_echelon",
    "column_space_basis", "lcm_denominators", "rank", "solve_nullspace", "PolyZ",
    "RatFunc", "RatFuncZeroDivision", "SparseMatrix",
]
