"""Trace polynomials, icosian representations and cover homology for one-relator products of cyclic groups."""

__version__ = "0.1.0"

from .exact import GfPoly, GoldenScalar, PHI
from .words import GroupWord, parse_word, word_inverse, all_words
from .trace import trace_polynomial
from .verdict import OMEGA, VerdictTag, rosenberger_verdict, enumerate_words
from .icosians import binary_icosahedral, essential_representation
from .lattice import verify_midpoint_lattice
from .subgroups import Presentation, gamma_presentation
from .covers import build_finite_cover, h1_growth_experiment, homology_f2, presentation_complex
from .jets import lambda_representation, jets_check

__all__ = [
    "GfPoly", "GoldenScalar", "PHI", "GroupWord", "parse_word", "word_inverse", "all_words",
    "trace_polynomial", "OMEGA", "VerdictTag", "rosenberger_verdict", "enumerate_words",
    "binary_icosahedral", "essential_representation", "verify_midpoint_lattice", "Presentation",
    "gamma_presentation", "build_finite_cover", "h1_growth_experiment", "homology_f2",
    "presentation_complex", "lambda_representation", "jets_check",
]
