"""Exact-arithmetic toolkit for finite-dimensional Hopf algebras,
module algebras, tame and Hopf-Galois extensions, integer lattice
orders, and the cyclic-type operator checks that tie them together.

Everything is computed over Q, prime fields, or Z with structure
constants and exact linear algebra; there is no floating point
anywhere in the package.
"""

from .linalg import GF, QQ, ZZ, Matrix

__version__ = "0.1.0"

__all__ = ["GF", "QQ", "ZZ", "Matrix", "__version__"]
