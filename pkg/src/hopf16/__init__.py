"""Exact verification engine and catalog for the sixteen nontrivial
semisimple Hopf algebras of dimension 16."""

__version__ = "0.1.0"

from .cyclo import CycNum
from .hopf import HopfAlgebra, Report, verify_axioms, verify_morphism
from .fusion import FusionRing
from . import catalog, classify

__all__ = ["CycNum", "HopfAlgebra", "Report", "FusionRing",
           "verify_axioms", "verify_morphism", "catalog", "classify",
           "__version__"]
