"""Knot Floer concordance invariants from filtered chain complexes."""

from kfc.complex import Arrow, CfkComplex, Generator, dual, tensor, validate
from kfc.errors import KfcError
from kfc.hat import HatArrow, HatComplex, HatGenerator
from kfc.invariants import report

__all__ = ["Arrow", "CfkComplex", "Generator", "HatArrow", "HatComplex", "HatGenerator",
           "KfcError", "dual", "report", "tensor", "validate"]
__version__ = "0.1.0"
