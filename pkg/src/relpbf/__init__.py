"""Exact construction and verification of the relative parabose set as a Z2 x Z2 color Lie algebra."""

from .core import Coefficient, Grade, theta
from .colorlie import ColorAlgebra, Element
from .pbf import PbfAlgebra, build, super_subalgebra

__all__ = ["Coefficient", "ColorAlgebra", "Element", "Grade", "PbfAlgebra", "build", "super_subalgebra", "theta"]
__version__ = "0.1.0"
