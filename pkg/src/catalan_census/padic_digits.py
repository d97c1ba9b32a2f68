"""Base-p digit expansions and the p-adic helpers built on them.

Everything here works on plain ``int`` values.  Inputs are range-checked
against :data:`MAX_NATURAL` so that results match what a fixed-width
(signed 64-bit) implementation would accept; exceeding it raises
:class:`OverflowError` instead of silently producing a huge value.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

# Largest value a Natural may hold (signed 64-bit).  Only 0 .. 2**62 is promised.
MAX_NATURAL = 2**63 - 1


def check_natural(n: int, name: str = "n") -> int:
    """Validate ``n`` as a non-negative machine-width integer and return it."""
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"{name} must be an int, got {type(n).__name__}")
    if n < 0:
        raise ValueError(f"{name} must be non-negative, got {n}")
    if n > MAX_NATURAL:
        raise OverflowError(f"{name}={n} exceeds the supported range 0..{MAX_NATURAL}")
    return n


def succ(n: int) -> int:
    """Return ``n + 1``, raising OverflowError past :data:`MAX_NATURAL`."""
    check_natural(n)
    return check_natural(n + 1, "n + 1")


def _check_base(p: int) -> None:
    if isinstance(p, bool) or not isinstance(p, int):
        raise TypeError("base must be an int")
    if p < 2:
        raise ValueError(f"base must be >= 2, got {p}")


@dataclass(frozen=True)
class DigitExpansion:
    """Digits of a natural number in ``base``, least-significant first.

    Zero is the empty tuple; otherwise the last digit is nonzero.
    """

    base: int
    digits: Tuple[int, ...]

    def __post_init__(self) -> None:
        _check_base(self.base)
        object.__setattr__(self, "digits", tuple(self.digits))
        for d in self.digits:
            if not 0 <= d < self.base:
                raise ValueError(f"digit {d} out of range for base {self.base}")
        if self.digits and self.digits[-1] == 0:
            raise ValueError("most-significant digit must be nonzero")

    @property
    def value(self) -> int:
        total = 0
        for d in reversed(self.digits):
            total = total * self.base + d
        return total

    def __len__(self) -> int:
        return len(self.digits)

    def __str__(self) -> str:
        body = "".join(str(d) for d in reversed(self.digits)) or "0"
        return f"{body}_{self.base}"


def _binary_digits(n: int) -> Tuple[int, ...]:
    return tuple((n >> i) & 1 for i in range(n.bit_length()))


def _division_digits(n: int, p: int) -> Tuple[int, ...]:
    out = []
    while n:
        n, r = divmod(n, p)
        out.append(r)
    return tuple(out)


def expand(n: int, p: int) -> DigitExpansion:
    """Canonical base-``p`` expansion of ``n``.

    >>> expand(11, 2).digits
    (1, 1, 0, 1)
    >>> expand(0, 2).digits
    ()
    """
    _check_base(p)
    check_natural(n)
    digits = _binary_digits(n) if p == 2 else _division_digits(n, p)
    return DigitExpansion(p, digits)


def digit_ones_count(e: DigitExpansion) -> int:
    """Number of positions (position 0 included) holding the digit 1."""
    return sum(1 for d in e.digits if d == 1)


def omega(n: int, p: int) -> int:
    """Exponent of the largest power of ``p`` dividing ``n`` (n >= 1)."""
    _check_base(p)
    check_natural(n)
    if n == 0:
        raise ValueError("omega is undefined for n = 0")
    if p == 2:
        return (n & -n).bit_length() - 1
    a = 0
    while n % p == 0:
        n //= p
        a += 1
    return a


def cofactor(n: int, p: int) -> int:
    """``n`` with every factor of ``p`` removed (n >= 1)."""
    _check_base(p)
    check_natural(n)
    if n == 0:
        raise ValueError("cofactor is undefined for n = 0")
    if p == 2:
        return n >> omega(n, 2)
    while n % p == 0:
        n //= p
    return n


def alpha_of(n: int) -> int:
    """``(odd part of n+1 - 1) / 2``; C_n has 2-adic valuation popcount(alpha_of(n))."""
    return (cofactor(succ(n), 2) - 1) >> 1


def d3_star(n: int) -> int:
    """Count base-3 digits equal to 1, ignoring the units position."""
    return digit_ones_count(expand(n, 3)) - (1 if n % 3 == 1 else 0)


def is_tstar01_member(n: int) -> bool:
    """True iff every base-3 digit of ``n`` above the units digit is 0 or 1."""
    check_natural(n)
    n //= 3
    while n:
        n, r = divmod(n, 3)
        if r == 2:
            return False
    return True
