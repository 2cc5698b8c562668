"""Exact rationals, modular inverses and p-adic splitting.

``Rational`` is :class:`fractions.Fraction`: always in lowest terms with a
positive denominator, and ``0 == Fraction(0, 1)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotInvertible, NotPIntegral, ZeroInput

Rational = Fraction

__all__ = [
    "Rational",
    "PadicSplit",
    "as_rational",
    "is_prime",
    "mod_inverse",
    "padic_residue",
    "padic_split",
    "valuation",
]


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def is_prime(n: int) -> bool:
    """Deterministic trial division; meant for desk-scale ``n``."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def mod_inverse(a: int, m: int) -> int:
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if math.gcd(a, m) != 1:
        raise NotInvertible(f"{a} is not invertible modulo {m}")
    return pow(a, -1, m)


def valuation(a: int, p: int) -> int:
    """Exponent of ``p`` in the nonzero integer ``a``."""
    if a == 0:
        raise ZeroInput("valuation of 0 is infinite")
    a = abs(a)
    v = 0
    # square the divisor while it still divides; keeps huge inputs cheap
    powers = [p]
    while a % powers[-1] == 0:
        a //= powers[-1]
        v += 1 << (len(powers) - 1)
        powers.append(powers[-1] * powers[-1])
    for i in range(len(powers) - 2, -1, -1):
        if a % powers[i] == 0:
            a //= powers[i]
            v += 1 << i
    return v


@dataclass(frozen=True)
class PadicSplit:
    """``x == p**valuation * unit`` with ``unit`` a p-adic unit."""

    valuation: int
    unit: Fraction


def padic_split(x, p: int) -> PadicSplit:
    x = as_rational(x)
    if x == 0:
        raise ZeroInput("cannot split 0")
    vn = valuation(x.numerator, p)
    vd = valuation(x.denominator, p)
    unit = Fraction(x.numerator // p**vn, x.denominator // p**vd)
    return PadicSplit(vn - vd, unit)


def padic_residue(x, p: int, s: int) -> int:
    """Image of the p-integral rational ``x`` in ``Z / p**s``."""
    x = as_rational(x)
    if s < 1:
        raise ValueError("s must be positive")
    if x.denominator % p == 0:
        raise NotPIntegral(f"{x} has negative {p}-adic valuation")
    mod = p**s
    return x.numerator * pow(x.denominator, -1, mod) % mod
