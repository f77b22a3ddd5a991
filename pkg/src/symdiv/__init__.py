"""Partition division maps on symmetric and quasisymmetric functions."""
from .divmaps import adams, col_adjoint, coldiv, row_adjoint, rowdiv, verschiebung
from .partitions import SkewShape, conjugate, partitions_of
from .symfunc import SymFunc, convert, e, h, hall_inner, m, multiply, omega, p, s

__version__ = "0.1.0"

__all__ = [
    "SkewShape", "SymFunc", "adams", "col_adjoint", "coldiv", "conjugate", "convert", "e", "h",
    "hall_inner", "m", "multiply", "omega", "p", "partitions_of", "row_adjoint", "rowdiv", "s",
    "verschiebung",
]
