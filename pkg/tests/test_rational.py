from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from qcongruence.errors import NotInvertible, NotPIntegral, ZeroInput
from qcongruence.rational import (
    as_rational,
    is_prime,
    mod_inverse,
    padic_residue,
    padic_split,
    valuation,
)

PRIMES = st.sampled_from([2, 3, 5, 7, 11, 13, 19, 23, 101])
nonzero = st.integers(min_value=-10**40, max_value=10**40).filter(bool)


def naive_valuation(a, p):
    a, v = abs(a), 0
    while a % p == 0:
        a //= p
        v += 1
    return v


def test_as_rational_accepts_strings_and_ints():
    assert as_rational("3/4") == Fraction(3, 4)
    assert as_rational(5) == 5
    assert as_rational(Fraction(6, 8)) == Fraction(3, 4)


def test_is_prime_matches_sympy():
    assert [n for n in range(2000) if is_prime(n)] == list(sympy.primerange(0, 2000))


def test_mod_inverse():
    assert mod_inverse(3, 7) == 5
    assert mod_inverse(-1, 9) == 8
    with pytest.raises(NotInvertible):
        mod_inverse(3, 9)
    with pytest.raises(ValueError):
        mod_inverse(1, 1)


@given(nonzero, PRIMES)
def test_valuation_matches_repeated_division(a, p):
    assert valuation(a, p) == naive_valuation(a, p)


@given(st.integers(0, 300), PRIMES, st.integers(1, 10**6))
def test_valuation_of_large_powers(k, p, u):
    u = u * p + 1  # coprime to p
    assert valuation(u * p**k, p) == k


def test_valuation_of_zero():
    with pytest.raises(ZeroInput):
        valuation(0, 3)
    with pytest.raises(ZeroInput):
        padic_split(0, 3)


@given(nonzero, nonzero, PRIMES)
def test_padic_split_reassembles(a, b, p):
    x = Fraction(a, b)
    s = padic_split(x, p)
    assert s.unit * Fraction(p) ** s.valuation == x
    assert s.unit.numerator % p and s.unit.denominator % p


@given(nonzero, nonzero, st.sampled_from([3, 5, 7, 11]), st.integers(1, 6))
def test_padic_residue(a, b, p, s):
    x = Fraction(a, b)
    if x.denominator % p == 0:
        with pytest.raises(NotPIntegral):
            padic_residue(x, p, s)
        return
    r = padic_residue(x, p, s)
    assert 0 <= r < p**s
    assert (r * x.denominator - x.numerator) % p**s == 0


def test_padic_residue_example():
    # 9/8 mod 9
    assert padic_residue(Fraction(9, 8), 3, 2) == 0
    assert padic_residue(Fraction(1, 2), 3, 1) == 2
