"""Classify C_n modulo 2^k and modulo 3 without computing C_n.

The 2-adic valuation of C_n is the binary digit sum of ``alpha_of(n)``.
That determines whether ``2^k`` divides C_n and whether C_n is congruent to
``2^(k-1)`` mod ``2^k``, but nothing finer, so no full residue mod ``2^k``
is offered here (use :mod:`catalan_census.oracle` for that).

Modulo 3, C_n is 0 unless n+1 has only 0/1 base-3 digits above the units
position, in which case C_n is ``(-1)^d3_star(n+1)``.
"""
from __future__ import annotations

from dataclasses import dataclass

from catalan_census.padic_digits import (
    alpha_of,
    check_natural,
    d3_star,
    is_tstar01_member,
    succ,
)


@dataclass(frozen=True)
class TwoAdicClass:
    n: int
    alpha: int
    valuation: int


@dataclass(frozen=True)
class Mod3Residue:
    n: int
    residue: int
    in_shifted_tstar: bool
    # d3_star(n + 1); only meaningful when in_shifted_tstar
    sign_exponent: int


def _check_k(k: int) -> int:
    check_natural(k, "k")
    if k < 1:
        raise ValueError("k must be >= 1")
    return k


def classify_two_adic(n: int) -> TwoAdicClass:
    a = alpha_of(n)
    return TwoAdicClass(n=n, alpha=a, valuation=a.bit_count())


def divisible_by_2k(n: int, k: int) -> bool:
    """True iff 2^k divides C_n."""
    _check_k(k)
    return classify_two_adic(n).valuation >= k


def is_half_residue_2k(n: int, k: int) -> bool:
    """True iff C_n is congruent to 2^(k-1) modulo 2^k."""
    _check_k(k)
    return classify_two_adic(n).valuation == k - 1


def catalan_mod3(n: int) -> Mod3Residue:
    m = succ(n)
    if not is_tstar01_member(m):
        return Mod3Residue(n=n, residue=0, in_shifted_tstar=False, sign_exponent=d3_star(m))
    e = d3_star(m)
    return Mod3Residue(n=n, residue=2 if e & 1 else 1, in_shifted_tstar=True, sign_exponent=e)
