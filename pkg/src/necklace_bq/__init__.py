"""Necklace Lie bialgebras of quivers, height links and their biquantization.

All arithmetic is exact: coefficients are polynomials in ``h`` and ``hbar``
with ``Fraction`` coefficients, and elements are sparse linear combinations
over canonical basis keys.
"""

from .heightlink import Link, element, make_link, n_product, normalize, parse_link
from .necklace import Necklace, bracket, canonical, cobracket, parse_necklace
from .parse import parse_element
from .quiver import Edge, Quiver, jordan_quiver, parse_quiver
from .scalars import H, HBAR, ONE, ZERO, LinComb, Poly2, parse_poly2

__version__ = "0.1.0"

__all__ = [
    "Edge", "Quiver", "jordan_quiver", "parse_quiver",
    "Necklace", "canonical", "bracket", "cobracket", "parse_necklace",
    "Link", "make_link", "element", "normalize", "n_product", "parse_link",
    "Poly2", "LinComb", "H", "HBAR", "ONE", "ZERO", "parse_poly2", "parse_element",
]
