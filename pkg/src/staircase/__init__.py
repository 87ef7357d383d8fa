"""Exact algebra for staircase Schur functions, ASM enumeration, and compound determinants."""

from .exactnum import CycloNum, Rat, cyclo_arith, cyclotomic_polynomial, root_power
from .multipoly import NotDivisible, Poly, kernel_backend, variables

__version__ = "0.1.0"

__all__ = [
    "CycloNum",
    "NotDivisible",
    "Poly",
    "Rat",
    "cyclo_arith",
    "cyclotomic_polynomial",
    "kernel_backend",
    "root_power",
    "variables",
    "__version__",
]
