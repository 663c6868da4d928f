"""Exact computations with shifted Yangians, their GKLO representations and
slices in the affine Grassmannian."""

from .cartan import CartanDatum, Coweight, cartan, coweight
from .gklo import GKLORep, InstanceResult, gklo_data, verify_relations
from .kernels import COMPILED
from .rational import rat

__version__ = "0.1.0"

__all__ = [
    "COMPILED",
    "CartanDatum",
    "Coweight",
    "GKLORep",
    "InstanceResult",
    "cartan",
    "coweight",
    "gklo_data",
    "rat",
    "verify_relations",
]
