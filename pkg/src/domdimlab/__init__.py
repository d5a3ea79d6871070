"""domdimlab: exact homological invariants of finite-dimensional algebras.

Two engines compute the same invariants along independent routes: a
purely combinatorial one for connected Nakayama algebras given by
Kupisch series, and an exact-linear-algebra one for algebras presented
by basis and structure constants (including compiled bounded quiver
algebras).  The overlap of the two is used as a cross-checking oracle
throughout the test suite.
"""

__version__ = "0.1.0"

from .bounded import BoundedValue
from .exactmath import F2, F3, QQ, FieldSpec, Matrix
from .nakayama import NakAlgebra, NakModule, validate

__all__ = [
    "BoundedValue",
    "FieldSpec",
    "Matrix",
    "F2",
    "F3",
    "QQ",
    "NakAlgebra",
    "NakModule",
    "validate",
    "__version__",
]
