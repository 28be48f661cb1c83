"""Chiral and reflexible rotary maps on the lexicographic products C_n[mK_1]."""
from .constructions import FamilyId, recipe
from .lexgraph import InvalidParameters, LexGraph, build
from .mapcore import MapClass
from .permgroup import CapExceeded, GeneratedGroup, Permutation
from .verify import MapReport, census, verify_instance, verify_proof_identities

__version__ = "0.1.0"
