"""Hypermaps as pairs of permutations: genus, duality, spanning hypertrees,
deletion-contraction processes, meanders and labeled plane trees."""

from .errors import HypermapError, ParseError, PreconditionError, ValidationError
from .hypermap import Hypermap, new_hypermap
from .io import load_hypermap
from .perm import Permutation, parse_cycles

__all__ = [
    "Hypermap",
    "HypermapError",
    "ParseError",
    "Permutation",
    "PreconditionError",
    "ValidationError",
    "load_hypermap",
    "new_hypermap",
    "parse_cycles",
]
