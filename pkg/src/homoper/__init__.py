"""Exact computations with finite-dimensional Hom-associative algebras,
their bimodules and O-operators: axiom verification, graded and derived
brackets, O-operator cohomology, and deformation theory.
"""

__version__ = "0.1.0"

from .exlin import QQ, GF, Field, Matrix, ExactError, InputError, DomainError
from .homcore import HomAlgebra, Bimodule, LinearMap, Report, adjoint_bimodule
from .ooper import OOperator, HomDendriform
from .cochain import Cochain

__all__ = [
    "QQ", "GF", "Field", "Matrix",
    "ExactError", "InputError", "DomainError",
    "HomAlgebra", "Bimodule", "LinearMap", "Report", "adjoint_bimodule",
    "OOperator", "HomDendriform", "Cochain",
]
