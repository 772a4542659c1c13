"""First homology of cyclic branched covers of 2-bridge knots of genus 1 and 2."""

from .groups import AbelianGroup, canonicalize
from .homology import HomologyCertificate, homology
from .knotmodel import Genus1, Genus2, KnotRecord
from .oracle import CrossCheckReport, cross_check
from .zmat import IntMatrix, cokernel, smith_normal_form

__all__ = [
    "AbelianGroup",
    "CrossCheckReport",
    "Genus1",
    "Genus2",
    "HomologyCertificate",
    "IntMatrix",
    "KnotRecord",
    "canonicalize",
    "cokernel",
    "cross_check",
    "homology",
    "smith_normal_form",
]
