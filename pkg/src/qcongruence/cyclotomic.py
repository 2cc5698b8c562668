"""Cyclotomic polynomials, products of them, and Phi-factor counting.

Every q-shifted factorial with power-of-q parameters factors completely
into cyclotomic polynomials, since ``q**e - 1 = prod(Phi_d, d | e)``.
:class:`CyclotomicProduct` keeps values in that factored form; because the
``Phi_d`` are pairwise coprime irreducibles, a factored quotient is
automatically in lowest terms and gcd/lcm become exponent min/max.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

import numpy as np

from .errors import DuplicateIndex
from .poly import Poly, _obj, div_binomial, mul_binomial, poly_divrem

__all__ = [
    "CyclotomicProduct",
    "PhiModulus",
    "build_modulus",
    "count_phi_factors",
    "cyclotomic",
    "divisors",
    "euler_phi",
    "factorize",
    "mobius",
]


@lru_cache(maxsize=4096)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            out.append((p, k))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@lru_cache(maxsize=4096)
def divisors(n: int) -> tuple[int, ...]:
    divs = [1]
    for p, k in factorize(n):
        divs = [d * p**i for d in divs for i in range(k + 1)]
    return tuple(sorted(divs))


def mobius(n: int) -> int:
    f = factorize(n)
    if any(k > 1 for _, k in f):
        return 0
    return -1 if len(f) % 2 else 1


def euler_phi(n: int) -> int:
    r = n
    for p, _ in factorize(n):
        r = r // p * (p - 1)
    return r


# Append-only; a racing fill recomputes the identical value.
_CYCLOTOMIC_CACHE: dict[int, Poly] = {}


def cyclotomic(n: int) -> Poly:
    """``Phi_n(q)``: ``q**n - 1`` with every ``Phi_d``, ``d | n``, ``d < n`` divided out."""
    if n < 1:
        raise ValueError(f"cyclotomic index must be positive, got {n}")
    hit = _CYCLOTOMIC_CACHE.get(n)
    if hit is not None:
        return hit
    p = Poly.from_ints([-1] + [0] * (n - 1) + [1])
    for d in divisors(n)[:-1]:
        p, r = poly_divrem(p, cyclotomic(d))
        assert r.is_zero()
    _CYCLOTOMIC_CACHE[n] = p
    return p


def count_phi_factors(x: int, d: int, L: int, n: int) -> int:
    """Number of ``k`` in ``[0, L)`` with ``n | x + d*k``.

    This is the number of factors of ``(q^x; q^d)_L`` divisible by ``Phi_n``.
    """
    if L <= 0:
        return 0
    g = math.gcd(d, n)
    if x % g:
        return 0
    n1 = n // g
    k0 = (-(x // g) * pow(d // g, -1, n1)) % n1 if n1 > 1 else 0
    if k0 >= L:
        return 0
    return (L - 1 - k0) // n1 + 1


# ---------------------------------------------------------------------------
# factored products
# ---------------------------------------------------------------------------

class CyclotomicProduct:
    """``coeff * q**shift * prod(Phi_d ** e_d)`` with integer ``e_d`` of any sign.

    Instances are immutable; ``exps`` maps ``d`` to a nonzero exponent.
    """

    __slots__ = ("coeff", "shift", "_exps")

    def __init__(self, coeff=1, shift: int = 0, exps: Mapping[int, int] | None = None):
        coeff = Fraction(coeff)
        if coeff == 0:
            raise ValueError("CyclotomicProduct cannot represent zero")
        self.coeff = coeff
        self.shift = int(shift)
        self._exps = {d: e for d, e in (exps or {}).items() if e}

    @property
    def exps(self) -> dict[int, int]:
        return dict(self._exps)

    # -- constructors ------------------------------------------------------

    @classmethod
    def one(cls) -> "CyclotomicProduct":
        return cls()

    @classmethod
    def q_minus_one(cls, j: int) -> "CyclotomicProduct":
        """``q**j - 1`` for ``j >= 1``."""
        return cls(1, 0, {d: 1 for d in divisors(j)})

    @classmethod
    def one_minus(cls, e: int) -> "CyclotomicProduct":
        """``1 - q**e`` for nonzero ``e``."""
        if e == 0:
            raise ZeroDivisionError("1 - q^0 is zero")
        if e > 0:
            return cls(-1, 0, {d: 1 for d in divisors(e)})
        # 1 - q^-b = q^-b (q^b - 1)
        return cls(1, e, {d: 1 for d in divisors(-e)})

    @classmethod
    def one_plus(cls, e: int) -> "CyclotomicProduct":
        """``1 + q**e``; equals 2 when ``e == 0``."""
        if e == 0:
            return cls(2)
        b = abs(e)
        # 1 + q^b = (q^{2b} - 1)/(q^b - 1)
        exps = {d: 1 for d in divisors(2 * b) if b % d}
        return cls(1, e if e < 0 else 0, exps)

    # -- algebra -----------------------------------------------------------

    def __mul__(self, other) -> "CyclotomicProduct":
        if isinstance(other, (int, Fraction)):
            return CyclotomicProduct(self.coeff * other, self.shift, self._exps)
        exps = dict(self._exps)
        for d, e in other._exps.items():
            exps[d] = exps.get(d, 0) + e
        return CyclotomicProduct(self.coeff * other.coeff, self.shift + other.shift, exps)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicProduct":
        return CyclotomicProduct(1 / self.coeff, -self.shift,
                                 {d: -e for d, e in self._exps.items()})

    def __truediv__(self, other) -> "CyclotomicProduct":
        if isinstance(other, (int, Fraction)):
            return CyclotomicProduct(self.coeff / other, self.shift, self._exps)
        return self * other.inverse()

    def __pow__(self, k: int) -> "CyclotomicProduct":
        return CyclotomicProduct(self.coeff ** k, self.shift * k,
                                 {d: e * k for d, e in self._exps.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, CyclotomicProduct):
            return NotImplemented
        return (self.coeff, self.shift, self._exps) == (other.coeff, other.shift, other._exps)

    def __hash__(self) -> int:
        return hash((self.coeff, self.shift, tuple(sorted(self._exps.items()))))

    def __repr__(self) -> str:
        body = "*".join(f"Phi{d}^{e}" for d, e in sorted(self._exps.items()))
        return f"CyclotomicProduct({self.coeff} * q^{self.shift} * {body or '1'})"

    # -- queries -----------------------------------------------------------

    def valuation(self, d: int) -> int:
        """Multiplicity of ``Phi_d`` (negative when it sits in the denominator)."""
        return self._exps.get(d, 0)

    def degree(self) -> int:
        """Degree of the cyclotomic part (numerator minus denominator)."""
        return sum(e * euler_phi(d) for d, e in self._exps.items())

    def numerator_exps(self) -> dict[int, int]:
        return {d: e for d, e in self._exps.items() if e > 0}

    def denominator_exps(self) -> dict[int, int]:
        return {d: -e for d, e in self._exps.items() if e < 0}

    def binomials(self) -> dict[int, int]:
        """Exponents ``b_j`` with ``prod(Phi_d^e_d) == prod((q^j - 1)^b_j)``."""
        out: dict[int, int] = {}
        for d, e in self._exps.items():
            for j in divisors(d):
                mu = mobius(d // j)
                if mu:
                    out[j] = out.get(j, 0) + mu * e
        return {j: b for j, b in out.items() if b}

    def limit_at_one(self) -> Fraction | None:
        """Value at ``q = 1`` or ``None`` when ``Phi_1`` makes it 0 or infinite."""
        if self._exps.get(1, 0):
            return None
        val = self.coeff
        for d, e in self._exps.items():
            # Phi_d(1) = p if d = p^k, else 1
            f = factorize(d)
            if len(f) == 1:
                val *= Fraction(f[0][0]) ** e
        return val


def expand_exponents(exps: Mapping[int, int]) -> list[int]:
    """Integer coefficient vector of ``prod(Phi_d ** e_d)``; all ``e_d >= 0``.

    Built from ``q**j - 1`` multiplications followed by exact divisions,
    each linear in the current length.
    """
    if any(e < 0 for e in exps.values()):
        raise ValueError("negative exponent in a polynomial expansion")
    b = CyclotomicProduct(1, 0, exps).binomials()
    return apply_binomials([1], b).tolist()


def apply_binomials(c, b: Mapping[int, int]) -> np.ndarray:
    """Multiply ``c`` by ``prod((q^j - 1)^b_j)``; the result must be a polynomial.

    All multiplications run before any division, so every division is exact.
    """
    c = _obj(c)
    for j, e in b.items():
        for _ in range(max(e, 0)):
            c = mul_binomial(c, j)
    for j, e in b.items():
        for _ in range(max(-e, 0)):
            c = div_binomial(c, j)
    return c


# ---------------------------------------------------------------------------
# moduli
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PhiModulus:
    """``prod(Phi_{n_i} ** s_i)`` together with its expansion."""

    factors: tuple[tuple[int, int], ...]
    expanded: Poly = field(repr=False, compare=False)

    @property
    def degree(self) -> int:
        return self.expanded.degree

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(n for n, _ in self.factors)

    def __str__(self) -> str:
        return "*".join(f"Phi_{n}^{s}" if s != 1 else f"Phi_{n}" for n, s in self.factors)


def build_modulus(spec: Iterable[tuple[int, int]]) -> PhiModulus:
    factors = tuple((int(n), int(s)) for n, s in spec)
    seen = set()
    for n, s in factors:
        if n in seen:
            raise DuplicateIndex(f"cyclotomic index {n} repeated")
        seen.add(n)
        if n < 2 or s < 1:
            raise ValueError(f"bad modulus factor Phi_{n}^{s}")
    ints = expand_exponents({n: s for n, s in factors})
    expanded = Poly.from_ints(ints)
    assert expanded.degree == sum(s * euler_phi(n) for n, s in factors)
    return PhiModulus(factors, expanded)
