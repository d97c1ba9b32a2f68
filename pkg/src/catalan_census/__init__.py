"""Catalan numbers modulo 2^k and 3 from base-2/base-3 digit arithmetic."""

from catalan_census.padic_digits import (
    MAX_NATURAL,
    DigitExpansion,
    alpha_of,
    cofactor,
    d3_star,
    digit_ones_count,
    expand,
    is_tstar01_member,
    omega,
)
from catalan_census.classifier import (
    Mod3Residue,
    TwoAdicClass,
    catalan_mod3,
    classify_two_adic,
    divisible_by_2k,
    is_half_residue_2k,
)

__all__ = [
    "MAX_NATURAL",
    "DigitExpansion",
    "Mod3Residue",
    "TwoAdicClass",
    "alpha_of",
    "catalan_mod3",
    "classify_two_adic",
    "cofactor",
    "d3_star",
    "digit_ones_count",
    "divisible_by_2k",
    "expand",
    "is_half_residue_2k",
    "is_tstar01_member",
    "omega",
]

__version__ = "0.1.0"
