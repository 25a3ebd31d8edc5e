"""Simple walks on braids and the colored Jones polynomials they compute."""

from .braid import BraidLetter, BraidParseError, BraidWord, parse_braid, parse_compact
from .bracket import jones_via_bracket
from .closed_forms import closed_form
from .engine import colored_jones, kashaev_evaluation
from .errors import DomainError, ResourceLimitError
from .laurent import LaurentPoly
from .minimize import minimize_walks, normalize_leading, symmetry_orbit
from .walks import count_simple_walks, enumerate_simple_walks

__all__ = [
    "BraidLetter",
    "BraidParseError",
    "BraidWord",
    "DomainError",
    "LaurentPoly",
    "ResourceLimitError",
    "closed_form",
    "colored_jones",
    "count_simple_walks",
    "enumerate_simple_walks",
    "jones_via_bracket",
    "kashaev_evaluation",
    "minimize_walks",
    "normalize_leading",
    "parse_braid",
    "parse_compact",
    "symmetry_orbit",
]
__version__ = "0.1.0"
