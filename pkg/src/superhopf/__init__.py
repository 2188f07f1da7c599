"""Hopf algebras of symmetric, quasisymmetric and noncommutative symmetric functions in superspace.

Everything is exact: coefficients are :class:`fractions.Fraction`, and the
Macdonald step works over ``Q(u)``.
"""
from .combinatorics import DottedComposition, SuperPartition, dc, sp
from .kernel import LinComb, TensorComb

__version__ = "0.1.0"

__all__ = ["DottedComposition", "SuperPartition", "LinComb", "TensorComb", "dc", "sp", "__version__"]
