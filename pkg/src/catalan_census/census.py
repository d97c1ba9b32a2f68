"""Counts of residue classes of C_n over n < 2^t.

Three closed forms are provided exactly as usually stated:

* ``count_valuation_formula(t, k) = C(t, k+1)`` for #{n < 2^t : omega_2(C_n) = k}
* ``count_divisible_formula(t, k) = sum_{i=k+1}^{t} C(t, i)`` for 2^k | C_n
* ``count_half_residue_formula(t, k) = C(t, k)`` for C_n = 2^(k-1) mod 2^k

and an enumeration that tallies the real valuations.  The first and third
formulas are one short at k = 0 and k = 1 respectively: n = 2^t - 1 has
n + 1 = 2^t, so alpha(n) = 0 and C_n is odd, but its binary form has no 0
digit separating alpha from the trailing ones, so the hockey-stick count
misses it.  The divisibility count is exact because that element cancels.
:func:`boundary_discrepancy` reports this as data.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Optional

from catalan_census import tally
from catalan_census.padic_digits import alpha_of, check_natural, is_tstar01_member, omega

DEFAULT_MAX_T = 30


class EnumerationGuardError(ValueError):
    """Enumeration requested over a range larger than the configured guard."""


@dataclass(frozen=True)
class CensusReport:
    t: int
    k: int
    formula_count: int
    enumerated_count: Optional[int] = None

    @property
    def agrees(self) -> Optional[bool]:
        if self.enumerated_count is None:
            return None
        return self.formula_count == self.enumerated_count


def binomial(t: int, i: int) -> int:
    if i < 0 or i > t:
        return 0
    return math.comb(t, i)


def _check_t(t: int) -> None:
    check_natural(t, "t")
    if t < 1:
        raise ValueError("t must be >= 1")


def _check_k(k: int, minimum: int) -> None:
    check_natural(k, "k")
    if k < minimum:
        raise ValueError(f"k must be >= {minimum}")


def count_valuation_formula(t: int, k: int) -> int:
    _check_t(t)
    _check_k(k, 0)
    return binomial(t, k + 1)


def count_divisible_formula(t: int, k: int) -> int:
    _check_t(t)
    _check_k(k, 1)
    return sum(binomial(t, i) for i in range(k + 1, t + 1))


def count_half_residue_formula(t: int, k: int) -> int:
    _check_t(t)
    _check_k(k, 1)
    return binomial(t, k)


def enumerate_valuation_census(
    t: int, max_t: int = DEFAULT_MAX_T, workers: int = 1
) -> Dict[int, int]:
    """Tally omega_2(C_n) over every n < 2^t; zero counts are dropped."""
    _check_t(t)
    if t > max_t:
        raise EnumerationGuardError(f"t={t} exceeds enumeration guard {max_t}")
    hist = tally.valuation_histogram(0, 1 << t, workers=workers)
    return {k: c for k, c in enumerate(hist) if c}


def corrected_valuation_count(t: int, k: int, max_t: int = DEFAULT_MAX_T) -> int:
    """#{n < 2^t : omega_2(C_n) = k}, taken from enumeration rather than the formula."""
    _check_k(k, 0)
    return enumerate_valuation_census(t, max_t).get(k, 0)


def census_report(t: int, k: int, with_enumeration: bool = False, max_t: int = DEFAULT_MAX_T) -> CensusReport:
    formula = count_valuation_formula(t, k)
    counted = corrected_valuation_count(t, k, max_t) if with_enumeration else None
    return CensusReport(t, k, formula, counted)


def covered_by_hockey_stick(n: int, t: int) -> bool:
    """Whether n < 2^t has the form <[alpha]_2, 0, 1^s> within t binary digits.

    These are exactly the representations the hockey-stick count sums over:
    s trailing ones, a 0 separator, then alpha in the remaining t - s - 1 bits.
    """
    s = omega(n + 1, 2)
    return s <= t - 1 and alpha_of(n) < (1 << (t - s - 1))


@dataclass(frozen=True)
class BoundaryDiscrepancy:
    t: int
    k: int
    formula_count: int
    enumerated_count: int
    missed: List[int]

    @property
    def difference(self) -> int:
        return self.enumerated_count - self.formula_count


def boundary_discrepancy(t: int, k: int = 0, max_t: int = DEFAULT_MAX_T) -> BoundaryDiscrepancy:
    """Compare C(t, k+1) with enumeration and list the n it fails to account for.

    ``missed`` holds every n < 2^t with omega_2(C_n) = k that is not of the
    form counted by the hockey-stick argument.  Only brute-force scalar code
    is used here, so keep t small.
    """
    _check_t(t)
    if t > max_t:
        raise EnumerationGuardError(f"t={t} exceeds enumeration guard {max_t}")
    hits = [n for n in range(1 << t) if alpha_of(n).bit_count() == k]
    missed = [n for n in hits if not covered_by_hockey_stick(n, t)]
    return BoundaryDiscrepancy(t, k, count_valuation_formula(t, k), len(hits), missed)


def count_tstar_below(limit_exponent: int) -> int:
    """Number of n < 3^limit_exponent whose base-3 digits above the units are all 0/1."""
    check_natural(limit_exponent, "limit_exponent")
    if limit_exponent < 1:
        raise ValueError("limit_exponent must be >= 1")
    return 3 * 2 ** (limit_exponent - 1)


def enumerate_tstar_below(limit_exponent: int) -> int:
    """Brute-force counterpart of :func:`count_tstar_below`."""
    return sum(1 for n in range(3**limit_exponent) if is_tstar01_member(n))
