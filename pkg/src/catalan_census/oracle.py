"""Exact Catalan numbers as Python ints, used as ground truth.

``iter_catalan`` walks the recurrence C_{m+1} = C_m * 2(2m+1) / (m+2) and
checks at every step that the division is exact.  ``verify_range`` runs
the digit-based classifier against it over a whole prefix of n.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Tuple

from catalan_census.classifier import (
    catalan_mod3,
    classify_two_adic,
    divisible_by_2k,
    is_half_residue_2k,
)
from catalan_census.padic_digits import check_natural, omega

DEFAULT_ORACLE_BOUND = 50_000


class OracleBoundError(ValueError):
    """Requested n lies beyond the configured oracle bound."""


@dataclass(frozen=True)
class BigCatalan:
    n: int
    value: int


def _check_bound(n: int, bound: int) -> None:
    check_natural(n)
    if n > bound:
        raise OracleBoundError(f"n={n} exceeds oracle bound {bound}")


def catalan_direct(n: int) -> int:
    """binomial(2n, n) / (n + 1), independent of the recurrence."""
    q, r = divmod(math.comb(2 * n, n), n + 1)
    assert r == 0
    return q


def iter_catalan(start: int = 0, stop: Optional[int] = None) -> Iterator[BigCatalan]:
    """Yield C_start, C_{start+1}, ... (up to ``stop`` exclusive, if given).

    The first value is seeded by the direct formula so that independent
    iterators can cover disjoint ranges.
    """
    m = start
    value = 1 if start == 0 else catalan_direct(start)
    while stop is None or m < stop:
        yield BigCatalan(m, value)
        q, r = divmod(value * 2 * (2 * m + 1), m + 2)
        if r:
            raise ArithmeticError(f"recurrence step {m} -> {m + 1} is not exact")
        value = q
        m += 1


def catalan_exact(n: int, bound: int = DEFAULT_ORACLE_BOUND) -> BigCatalan:
    _check_bound(n, bound)
    for c in iter_catalan(0, n + 1):
        pass
    return c


def catalan_residue(n: int, m: int, bound: int = DEFAULT_ORACLE_BOUND) -> int:
    if m < 2:
        raise ValueError("modulus must be >= 2")
    return catalan_exact(n, bound).value % m


def legendre(n: int, p: int) -> int:
    """Exponent of p in n!, summing floor(n / p^i)."""
    total = 0
    pk = p
    while pk <= n:
        total += n // pk
        pk *= p
    return total


def valuation_from_factorials(n: int, p: int) -> int:
    """omega_p(C_n) as omega_p((2n)!) - 2 omega_p(n!) - omega_p(n+1)."""
    return legendre(2 * n, p) - 2 * legendre(n, p) - omega(n + 1, p)


def _big_valuation(value: int, p: int) -> int:
    if p == 2:
        return (value & -value).bit_length() - 1
    a = 0
    while value % p == 0:
        value //= p
        a += 1
    return a


def valuation_exact(n: int, p: int, bound: int = DEFAULT_ORACLE_BOUND) -> int:
    if p < 2:
        raise ValueError("p must be >= 2")
    a = _big_valuation(catalan_exact(n, bound).value, p)
    b = valuation_from_factorials(n, p)
    if a != b:
        raise ArithmeticError(f"valuation disagreement at n={n}, p={p}: {a} != {b}")
    return a


@dataclass
class VerificationReport:
    n_checked: int = 0
    checks: int = 0
    mismatches: List[Tuple[int, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(
            self.n_checked + other.n_checked,
            self.checks + other.checks,
            self.mismatches + other.mismatches,
        )


def _verify_chunk(args: Tuple[int, int, int]) -> VerificationReport:
    lo, hi, k_max = args
    rep = VerificationReport()
    for c in iter_catalan(lo, hi):
        n, v = c.n, c.value
        rep.n_checked += 1

        val = _big_valuation(v, 2)
        if classify_two_adic(n).valuation != val:
            rep.mismatches.append((n, "valuation"))
        if val != valuation_from_factorials(n, 2):
            rep.mismatches.append((n, "factorial-valuation-2"))
        if catalan_mod3(n).residue != v % 3:
            rep.mismatches.append((n, "mod3"))
        if _big_valuation(v, 3) != valuation_from_factorials(n, 3):
            rep.mismatches.append((n, "factorial-valuation-3"))
        rep.checks += 4

        for k in range(1, k_max + 1):
            r = v & ((1 << k) - 1)
            if divisible_by_2k(n, k) != (r == 0):
                rep.mismatches.append((n, f"divisible-2^{k}"))
            if is_half_residue_2k(n, k) != (r == 1 << (k - 1)):
                rep.mismatches.append((n, f"half-residue-2^{k}"))
            rep.checks += 2
    return rep


def verify_range(
    n_max: int,
    k_max: int,
    bound: int = DEFAULT_ORACLE_BOUND,
    workers: int = 1,
) -> VerificationReport:
    """Check the classifier against exact C_n for every n < n_max.

    Mismatches are collected in the report rather than raised.
    """
    check_natural(k_max, "k_max")
    if n_max > 0:
        _check_bound(n_max - 1, bound)
    workers = max(1, workers)
    if workers == 1 or n_max < 2 * workers:
        return _verify_chunk((0, n_max, k_max))

    step = -(-n_max // workers)
    chunks = [(lo, min(lo + step, n_max), k_max) for lo in range(0, n_max, step)]
    report = VerificationReport()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_verify_chunk, chunks):
            report = report.merge(part)
    return report
