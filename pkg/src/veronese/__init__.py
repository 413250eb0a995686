"""Veronese category, secant ideals of Veronese subrings and their Betti numbers."""

from .graded_algebra import GradedAlgebra, from_description, p1, polynomial, semigroup, monomial_quotient
from .resolutions import betti, betti_table, bound_scan, max_tor_degree
from .secant_ideals import catalecticant_minors, sec_hilbert, secant

__all__ = [
    "GradedAlgebra",
    "betti",
    "betti_table",
    "bound_scan",
    "catalecticant_minors",
    "from_description",
    "max_tor_degree",
    "monomial_quotient",
    "p1",
    "polynomial",
    "sec_hilbert",
    "secant",
    "semigroup",
]

__version__ = "0.1.0"
