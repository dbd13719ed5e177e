"""Schubert polynomials, KP modules and their characters, with exact verification drivers."""

from .permkit import Permutation, Shape, Transition, code, from_code, shape_of
from .polyring import Expansion, SparsePoly, expand_schubert, schubert

__version__ = "0.1.0"

__all__ = [
    "Permutation", "Shape", "Transition", "code", "from_code", "shape_of",
    "Expansion", "SparsePoly", "expand_schubert", "schubert",
]
