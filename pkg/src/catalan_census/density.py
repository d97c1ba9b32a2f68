"""Density of n with 2^k | C_n (or 3 | C_n) among n < N, against lower bounds.

All quantities are exact ``Fraction`` values; rendering to decimal happens
in the CLI.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from catalan_census import tally
from catalan_census.census import binomial
from catalan_census.padic_digits import check_natural

DEFAULT_MAX_N = 1 << 26


class DensityGuardError(ValueError):
    """A requested N exceeds the sweep guard."""


@dataclass(frozen=True)
class DensityRow:
    N: int
    # ("pow2", k) or ("three", None)
    modulus: Tuple[str, Union[int, None]]
    divisible_count: int
    empirical_density: Fraction
    analytic_lower_bound: Fraction

    @property
    def modulus_value(self) -> int:
        kind, k = self.modulus
        return 1 << k if kind == "pow2" else 3


def floor_log(N: int, base: int) -> int:
    """Largest e with base**e <= N, in integer arithmetic."""
    check_natural(N, "N")
    if N < 1:
        raise ValueError("floor_log needs N >= 1")
    if base < 2:
        raise ValueError("base must be >= 2")
    if base == 2:
        return N.bit_length() - 1
    e, power = 0, base
    while power <= N:
        power *= base
        e += 1
    return e


def _check_positive(x: int, name: str) -> None:
    check_natural(x, name)
    if x < 1:
        raise ValueError(f"{name} must be >= 1")


def odd_count_polynomial(r: int, k: int) -> int:
    """sum_{i=0}^{k-1} C(r+1, i+1), which bounds #{n < N : omega_2(C_n) < k} for r = floor(log2 N)."""
    return sum(binomial(r + 1, i + 1) for i in range(k))


def lower_bound_mod2k(N: int, k: int) -> Fraction:
    _check_positive(N, "N")
    _check_positive(k, "k")
    return 1 - Fraction(odd_count_polynomial(floor_log(N, 2), k), N)


def tstar_count_bound(N: int) -> int:
    """3 * 2^floor(log3 N), an upper bound on #{n <= N in T*(01)}."""
    _check_positive(N, "N")
    return 3 * 2 ** floor_log(N, 3)


def _check_sweep(N_values: Sequence[int], max_n: int) -> None:
    for N in N_values:
        _check_positive(N, "N")
        if N > max_n:
            raise DensityGuardError(f"N={N} exceeds sweep guard {max_n}")


def _prefix_counts(N_values: Sequence[int], count_range, workers: int) -> List[int]:
    # Count once over [0, max N), stopping at each requested N in increasing order.
    counts = {}
    running, prev = 0, 0
    for N in sorted(set(N_values)):
        running += count_range(prev, N, workers)
        counts[N] = running
        prev = N
    return [counts[N] for N in N_values]


def density_sweep_mod2k(
    N_values: Sequence[int], k: int, max_n: int = DEFAULT_MAX_N, workers: int = 1
) -> List[DensityRow]:
    _check_positive(k, "k")
    N_values = list(N_values)
    _check_sweep(N_values, max_n)
    counts = _prefix_counts(
        N_values, lambda lo, hi, w: tally.count_divisible_2k(lo, hi, k, workers=w), workers
    )
    return [
        DensityRow(
            N=N,
            modulus=("pow2", k),
            divisible_count=c,
            empirical_density=Fraction(c, N),
            analytic_lower_bound=max(Fraction(0), lower_bound_mod2k(N, k)),
        )
        for N, c in zip(N_values, counts)
    ]


def density_sweep_mod3(
    N_values: Sequence[int], max_n: int = DEFAULT_MAX_N, workers: int = 1
) -> List[DensityRow]:
    N_values = list(N_values)
    _check_sweep(N_values, max_n)
    counts = _prefix_counts(
        N_values, lambda lo, hi, w: tally.mod3_histogram(lo, hi, workers=w)[0], workers
    )
    rows = []
    for N, c in zip(N_values, counts):
        bound = tstar_count_bound(N)
        if N - c > bound:
            raise ArithmeticError(f"nonzero residues below {N} exceed T*(01) bound {bound}")
        rows.append(
            DensityRow(
                N=N,
                modulus=("three", None),
                divisible_count=c,
                empirical_density=Fraction(c, N),
                analytic_lower_bound=max(Fraction(0), 1 - Fraction(bound, N)),
            )
        )
    return rows
