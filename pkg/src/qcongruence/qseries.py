"""q-shifted factorials, the two summand families, and exact partial sums.

Two summand families are supported:

``T1``  ``(1 + q^{4k+1}) (q^2;q^4)_k^3 / ((1 + q) (q^4;q^4)_k^3) * q^k``
``C2``  ``(q;q^2)_k^2 (q^2;q^4)_k / ((q^2;q^2)_k^2 (q^4;q^4)_k) * q^{2k}``

Partial sums are accumulated in factored form (see :func:`sum_products`)
and come back as fully reduced :class:`RatFunc` values.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .cyclotomic import (
    CyclotomicProduct,
    apply_binomials,
    cyclotomic,
    expand_exponents,
    mobius,
    divisors,
)
from .errors import DivisionByZeroPoly
from .poly import (
    LaurentPoly,
    Poly,
    _obj,
    _rem_monic,
    _trim,
    fold_binomial,
    mul_binomial,
    poly_divrem,
    poly_gcd,
)

__all__ = [
    "Family",
    "FactorRatio",
    "LimitTag",
    "RatFunc",
    "partial_sum",
    "poch_product",
    "q_limit_one",
    "qint",
    "qpoch",
    "rhs_ratio",
    "sum_products",
    "summand",
    "summand_product",
]


class Family(str, enum.Enum):
    T1 = "T1"
    C2 = "C2"


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------

class RatFunc:
    """Reduced quotient ``num / den`` of polynomials with ``den`` monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, reduced: bool = False):
        num = num if isinstance(num, Poly) else Poly([num])
        den = Poly.one() if den is None else (den if isinstance(den, Poly) else Poly([den]))
        if den.is_zero():
            raise DivisionByZeroPoly("zero denominator")
        if num.is_zero():
            num, den = Poly.zero(), Poly.one()
        elif not reduced and den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = poly_divrem(num, g)[0]
                den = poly_divrem(den, g)[0]
        lc = den.lc
        if lc != 1:
            num, den = num * (1 / lc), den * (1 / lc)
        self.num = num
        self.den = den

    @classmethod
    def from_product(cls, p: CyclotomicProduct) -> "RatFunc":
        num = Poly.from_ints(expand_exponents(p.numerator_exps())) * p.coeff
        den = Poly.from_ints(expand_exponents(p.denominator_exps()))
        if p.shift >= 0:
            num = num.shift(p.shift)
        else:
            den = den.shift(-p.shift)
        return cls(num, den, reduced=True)

    @classmethod
    def from_laurent(cls, lp: LaurentPoly) -> "RatFunc":
        if lp.shift >= 0:
            return cls(lp.body.shift(lp.shift), reduced=True)
        return cls(lp.body, Poly.monomial(-lp.shift), reduced=True)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other) -> "RatFunc":
        other = _as_ratfunc(other)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den, reduced=True)

    def __sub__(self, other) -> "RatFunc":
        return self + (-_as_ratfunc(other))

    def __mul__(self, other) -> "RatFunc":
        other = _as_ratfunc(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        other = _as_ratfunc(other)
        if other.is_zero():
            raise DivisionByZeroPoly("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __eq__(self, other) -> bool:
        try:
            other = _as_ratfunc(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __call__(self, x) -> Fraction:
        return self.num(x) / self.den(x)

    def __repr__(self) -> str:
        return f"RatFunc({self.num!r}, {self.den!r})"


def _as_ratfunc(x) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (Poly, int, Fraction)):
        return RatFunc(x, reduced=True)
    if isinstance(x, CyclotomicProduct):
        return RatFunc.from_product(x)
    raise TypeError(f"cannot convert {type(x).__name__} to RatFunc")


# ---------------------------------------------------------------------------
# building blocks
# ---------------------------------------------------------------------------

def qpoch(x: int, d: int, k: int) -> LaurentPoly:
    """``(q^x; q^d)_k`` expanded directly, factor by factor."""
    body = [1]
    shift = 0
    for j in range(k):
        e = x + j * d
        if e == 0:
            return LaurentPoly(Poly.zero())
        if e > 0:
            body = -mul_binomial(body, e)
        else:
            # 1 - q^-b = q^-b (q^b - 1)
            body = mul_binomial(body, -e)
            shift += e
    return LaurentPoly(Poly.from_ints(list(body)), shift)


def poch_product(x: int, d: int, k: int, sign: int = 1) -> CyclotomicProduct | None:
    """``(sign*q^x; q^d)_k`` in factored form, ``None`` if a factor vanishes."""
    out = CyclotomicProduct.one()
    for j in range(k):
        e = x + j * d
        if sign == 1:
            if e == 0:
                return None
            out = out * CyclotomicProduct.one_minus(e)
        else:
            out = out * CyclotomicProduct.one_plus(e)
    return out


def qint(n: int, b: int = 1) -> Poly:
    """``[n]_{q^b} = 1 + q^b + ... + q^{(n-1)b}``."""
    if n < 0:
        raise ValueError("q-integer of a negative number")
    c = [0] * ((n - 1) * b + 1) if n else []
    for i in range(n):
        c[i * b] = 1
    return Poly.from_ints(c)


class LimitTag(enum.Enum):
    """Limit of a factor ratio at ``q = 1`` when factor counts differ."""

    ZERO = "zero"
    INFINITE = "infinite"


@dataclass(frozen=True)
class FactorRatio:
    """``coefficient * q^shift * prod[n]_{q^b} * prod(1 - q^a) / prod(1 - q^b)``."""

    numerator_exponents: tuple[int, ...] = ()
    denominator_exponents: tuple[int, ...] = ()
    monomial_shift: int = 0
    qint_factors: tuple[tuple[int, int], ...] = ()
    coefficient: Fraction = Fraction(1)

    def __post_init__(self):
        if 0 in self.numerator_exponents or 0 in self.denominator_exponents:
            raise ValueError("factor exponents must be nonzero")
        if any(n < 1 or b < 1 for n, b in self.qint_factors):
            raise ValueError("q-integer factors need positive n and base")

    def to_product(self) -> CyclotomicProduct:
        out = CyclotomicProduct(self.coefficient, self.monomial_shift)
        for a in self.numerator_exponents:
            out = out * CyclotomicProduct.one_minus(a)
        for b in self.denominator_exponents:
            out = out / CyclotomicProduct.one_minus(b)
        for n, b in self.qint_factors:
            if n > 1:
                out = out * CyclotomicProduct.q_minus_one(n * b) / CyclotomicProduct.q_minus_one(b)
        return out

    def expand(self) -> RatFunc:
        return RatFunc.from_product(self.to_product())


def rhs_ratio(M: int, n_power: int, *, qint_base: int = 2,
              shift: int | None = None) -> FactorRatio:
    """``[n_power]_{q^qint_base} (q^3;q^4)_M / (q^5;q^4)_M * q^shift``; shift defaults to ``-M``."""
    return FactorRatio(
        numerator_exponents=tuple(4 * k - 1 for k in range(1, M + 1)),
        denominator_exponents=tuple(4 * k + 1 for k in range(1, M + 1)),
        monomial_shift=-M if shift is None else shift,
        qint_factors=((n_power, qint_base),),
    )


def q_limit_one(r: FactorRatio) -> Fraction | LimitTag:
    """Limit at ``q = 1``, taken factor by factor: ``(1-q^a)/(1-q^b) -> a/b``."""
    na, nb = len(r.numerator_exponents), len(r.denominator_exponents)
    if na != nb:
        return LimitTag.ZERO if na > nb else LimitTag.INFINITE
    val = Fraction(r.coefficient)
    val *= Fraction(math.prod(r.numerator_exponents), math.prod(r.denominator_exponents))
    for n, _ in r.qint_factors:
        val *= n
    return val


# ---------------------------------------------------------------------------
# summands and sums
# ---------------------------------------------------------------------------

def summand_product(family, k: int) -> CyclotomicProduct:
    family = Family(family)
    if family is Family.T1:
        t = CyclotomicProduct.one_plus(4 * k + 1) / CyclotomicProduct.one_plus(1)
        t = t * poch_product(2, 4, k) ** 3 / poch_product(4, 4, k) ** 3
        return t * CyclotomicProduct(1, k)
    t = poch_product(1, 2, k) ** 2 * poch_product(2, 4, k)
    t = t / (poch_product(2, 2, k) ** 2 * poch_product(4, 4, k))
    return t * CyclotomicProduct(1, 2 * k)


def summand(family, k: int) -> RatFunc:
    return RatFunc.from_product(summand_product(family, k))


def _phi_divides(c: list[int], d: int) -> bool:
    if not any(c):
        return True
    r = fold_binomial(c, d)
    return not any(_rem_monic(r, cyclotomic(d).int_coeffs))


def _divide_phi(c: list[int], d: int) -> list[int]:
    b = {j: -mobius(d // j) for j in divisors(d) if mobius(d // j)}
    return _trim(apply_binomials(c, b).tolist())


def sum_products(terms: Sequence[CyclotomicProduct]) -> RatFunc:
    """Exact reduced sum of nonzero factored terms.

    With ``L`` the lcm of the denominators (exponent-wise max), each
    ``t_k * L`` is a polynomial; consecutive ones differ by the small factor
    ``t_k / t_{k-1}``, applied as a few ``q^j - 1`` multiplications and exact
    divisions.  The sum is then cleared of every ``Phi_d`` it shares with
    ``L``, which leaves it in lowest terms.
    """
    if not terms:
        return RatFunc(Poly.zero(), reduced=True)
    L: dict[int, int] = {}
    for t in terms:
        for d, e in t.denominator_exps().items():
            if e > L.get(d, 0):
                L[d] = e
    h_min = min(t.shift for t in terms)
    C = 1
    for t in terms:
        C = C * t.coeff.denominator // math.gcd(C, t.coeff.denominator)
    Lp = CyclotomicProduct(1, 0, L)

    acc = np.zeros(0, dtype=object)
    cur = None
    prev: CyclotomicProduct | None = None
    for t in terms:
        if cur is None:
            cur = _obj(expand_exponents((CyclotomicProduct(1, 0, t.exps) * Lp).exps))
        else:
            step = CyclotomicProduct(1, 0, t.exps) / CyclotomicProduct(1, 0, prev.exps)
            cur = apply_binomials(cur, step.binomials())
        prev = t
        scale = t.coeff * C
        assert scale.denominator == 1
        s = int(scale)
        off = t.shift - h_min
        need = off + len(cur)
        if len(acc) < need:
            acc = np.concatenate([acc, np.zeros(need - len(acc), dtype=object)])
        acc[off:need] += s * cur if s != 1 else cur
    acc = _trim(acc.tolist())
    if not acc:
        return RatFunc(Poly.zero(), reduced=True)

    # powers of q: sum = acc * q^h_min / (C * L)
    low = 0
    while not acc[low]:
        low += 1
    q_num = h_min + low
    acc = acc[low:]
    for d in sorted(L):
        while L.get(d, 0) > 0 and _phi_divides(acc, d):
            acc = _divide_phi(acc, d)
            L[d] -= 1
    num = Poly.from_ints(acc, C)
    den = Poly.from_ints(expand_exponents({d: e for d, e in L.items() if e > 0}))
    if q_num >= 0:
        num = num.shift(q_num)
    else:
        den = den.shift(-q_num)
    return RatFunc(num, den, reduced=True)


def partial_sum(family, N: int) -> RatFunc:
    """``sum_{k=0}^{N-1} summand(family, k)``, fully reduced."""
    return sum_products([summand_product(family, k) for k in range(N)])
