"""hopfax: exact verification of Hopf algebras, cocycle cross products,
Hopf algebroids and Hopf-Galois extensions over Q and cyclotomic fields."""

from .scalars import QQ, CyclotomicField, BadScalar, field_from_tag
from .linalg import QuotientSpace, build_quotient, kernel, rank, rref
from .tensor import CoeffTensor
from .report import Report
from .hopf import (
    CoquasiStructure,
    FinAlgebra,
    FinCoalgebra,
    HopfAlgebra,
    HopfCotwist,
    convolution_inverse,
    cotwist_hopf,
    drinfeld_uv,
    validate_hopf,
)

__all__ = [
    "QQ",
    "CyclotomicField",
    "BadScalar",
    "field_from_tag",
    "QuotientSpace",
    "build_quotient",
    "kernel",
    "rank",
    "rref",
    "CoeffTensor",
    "Report",
    "CoquasiStructure",
    "FinAlgebra",
    "FinCoalgebra",
    "HopfAlgebra",
    "HopfCotwist",
    "convolution_inverse",
    "cotwist_hopf",
    "drinfeld_uv",
    "validate_hopf",
]

__version__ = "0.1.0"
