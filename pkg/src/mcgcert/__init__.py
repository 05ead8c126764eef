"""Homological obstructions for generating sets of the mapping class group of N_g."""

from .certifier import Certificate, GeneratorSet, Verdict, certify, verify_certificate
from .gf2 import GF2Matrix, Z2Vector
from .quadforms import Z4Form

__all__ = [
    "Certificate",
    "GF2Matrix",
    "GeneratorSet",
    "Verdict",
    "Z2Vector",
    "Z4Form",
    "certify",
    "verify_certificate",
]
