"""Exact computations for the N=2 superconformal algebra: Verma modules,
free-field realizations, the Kazama-Suzuki coset maps in both directions and
the classification of modules for the simple algebra L_{c_m}."""

from .classification import ClassificationVerdict, central_charge, classify, enumerate_W
from .n2_algebra import Gm, Gp, L, T, super_bracket
from .verma_n2 import HighestWeightN2, gram_matrix, singular_vectors

__version__ = "0.1.0"

__all__ = [
    "ClassificationVerdict", "central_charge", "classify", "enumerate_W",
    "Gm", "Gp", "L", "T", "super_bracket",
    "HighestWeightN2", "gram_matrix", "singular_vectors",
]
