"""Binary matroid computations: Delta-Y calculus, Mobius matroids, minors and checks."""
from .gf2 import Gf2Matrix
from .matroid import BinaryMatroid

__all__ = ["Gf2Matrix", "BinaryMatroid"]
