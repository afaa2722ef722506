"""Groebner-basis analysis and search for generalized toric codes on twisted tori."""

__version__ = "0.1.0"

from .algebra import (
    QuotientAlgebra,
    TwistedTorus,
    achieves_full_k,
    check_to_condition,
    factor_univariate,
    k_max,
    k_on_torus,
    minimal_period,
    minimal_untwisted_torus,
    standard_monomials,
    univariate_generator,
)
from .distance import DistancePolicy, DistanceResult, css_distance, distance_exact, distance_upper_ris
from .gb1d import GbCode1D, gcd_univariate, k_1d, reduce_to_1d
from .groebner import LEX_XY, LEX_YX, GroebnerBasis, MonomialOrder, buchberger, laurent_ideal_basis
from .lattice import CssCode, build_parity_checks, k_from_ranks
from .poly2 import LaurentPoly, parse, render
from .search import CodeRecord, SearchSpace, run_search

__all__ = [
    "QuotientAlgebra",
    "TwistedTorus",
    "achieves_full_k",
    "check_to_condition",
    "factor_univariate",
    "k_max",
    "k_on_torus",
    "minimal_period",
    "minimal_untwisted_torus",
    "standard_monomials",
    "univariate_generator",
    "DistancePolicy",
    "DistanceResult",
    "css_distance",
    "distance_exact",
    "distance_upper_ris",
    "GbCode1D",
    "gcd_univariate",
    "k_1d",
    "reduce_to_1d",
    "LEX_XY",
    "LEX_YX",
    "GroebnerBasis",
    "MonomialOrder",
    "buchberger",
    "laurent_ideal_basis",
    "CssCode",
    "build_parity_checks",
    "k_from_ranks",
    "LaurentPoly",
    "parse",
    "render",
    "CodeRecord",
    "SearchSpace",
    "run_search",
]
