"""Exact T-complexes of matroid representations and T-resolutions of
multigraded modules."""

from .field import QQ, GF, parse_field
from .matroid import Representation
from .tcomplex import build_T, build_T_plus, verify_acyclic
from .multigraded import MultigradedPresentation, build_resolution, verify_resolution

__version__ = "0.1.0"

__all__ = [
    "QQ", "GF", "parse_field", "Representation",
    "build_T", "build_T_plus", "verify_acyclic",
    "MultigradedPresentation", "build_resolution", "verify_resolution",
    "__version__",
]
