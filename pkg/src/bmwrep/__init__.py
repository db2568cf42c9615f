"""Exact Birman-Wenzl-Murakami diagram algebra and its dual polynomial
representation, with the Brauer (rational) limit."""

__version__ = "0.1.0"

from .kernel import BACKEND
from .scalars import AlgebraParams, Scalar

__all__ = ["AlgebraParams", "Scalar", "BACKEND", "__version__"]
