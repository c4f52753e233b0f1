"""Exact computations with maximal tori of GL_n, Sp_2n and SO_2n+1 over
finite fields, coinvariant algebras of types A and B/C, and stable twisted
Betti numbers."""

from .errors import StabilityError, VerificationError

__version__ = "0.1.0"

__all__ = ["StabilityError", "VerificationError", "__version__"]
