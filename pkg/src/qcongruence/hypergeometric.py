"""Terminating basic hypergeometric series with parameters of the form ``+-q^e``.

A series with upper parameters ``a_i``, lower parameters ``b_j``, base
``q^d`` and argument ``z`` is

    sum_k prod (a_i; q^d)_k / ((q^d; q^d)_k prod (b_j; q^d)_k) * z^k

Every Pochhammer symbol here factors into cyclotomic polynomials, so terms
are built in factored form and summed with :func:`~.qseries.sum_products`.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field

from .cyclotomic import CyclotomicProduct
from .errors import DegenerateParameters, NonTerminating, QCongruenceError
from .qseries import RatFunc, partial_sum, poch_product, sum_products
from .report import Report, Status

__all__ = [
    "QMonomial",
    "PhiSeriesSpec",
    "instance_2_3_equals_2_4",
    "phi_eval",
    "t1_watson_instance",
    "watson_check",
    "watson_sides",
]

DEFAULT_MAX_TERMS = 10_000


@dataclass(frozen=True)
class QMonomial:
    """``sign * q**exponent``."""

    sign: int = 1
    exponent: int = 0

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    @classmethod
    def q(cls, e: int) -> "QMonomial":
        return cls(1, e)

    def __mul__(self, other: "QMonomial") -> "QMonomial":
        return QMonomial(self.sign * other.sign, self.exponent + other.exponent)

    def __truediv__(self, other: "QMonomial") -> "QMonomial":
        return QMonomial(self.sign * other.sign, self.exponent - other.exponent)

    def zero_index(self, d: int) -> int | None:
        """Least ``j >= 0`` with ``1 - self * q^{jd} == 0``, if any."""
        if self.sign != 1 or self.exponent > 0 or self.exponent % d:
            return None
        return -self.exponent // d

    def factor(self, j: int, d: int) -> CyclotomicProduct:
        """``1 - self * q^{jd}``, which must be nonzero."""
        e = self.exponent + j * d
        if self.sign == 1:
            return CyclotomicProduct.one_minus(e)
        return CyclotomicProduct.one_plus(e)

    def poch(self, d: int, k: int) -> CyclotomicProduct | None:
        """``(self; q^d)_k`` in factored form; ``None`` when it vanishes."""
        return poch_product(self.exponent, d, k, self.sign)

    def __str__(self) -> str:
        return f"{'-' if self.sign < 0 else ''}q^{self.exponent}"


@dataclass(frozen=True)
class PhiSeriesSpec:
    upper: tuple[QMonomial, ...]
    lower: tuple[QMonomial, ...]
    base: int = 1
    argument: QMonomial = field(default_factory=QMonomial)

    def __post_init__(self):
        if self.base < 1:
            raise ValueError("base exponent must be positive")
        object.__setattr__(self, "upper", tuple(self.upper))
        object.__setattr__(self, "lower", tuple(self.lower))

    def last_index(self) -> int | None:
        """Index of the last possibly nonzero term."""
        zs = [z for z in (u.zero_index(self.base) for u in self.upper) if z is not None]
        return min(zs) if zs else None


def _check_lower(params, d: int, upto: int, what: str) -> None:
    """Raise if ``(b; q^d)_k`` has a zero factor with index below ``upto``."""
    for b in params:
        z = b.zero_index(d)
        if z is not None and z < upto:
            raise DegenerateParameters(f"{what} parameter {b} vanishes at factor {z}")


def phi_terms(spec: PhiSeriesSpec, max_terms: int = DEFAULT_MAX_TERMS,
              scale: CyclotomicProduct | None = None) -> list[CyclotomicProduct]:
    """Nonzero terms of the series in factored form, each times ``scale``."""
    last = spec.last_index()
    if last is None or last >= max_terms:
        raise NonTerminating(f"no zero factor within {max_terms} terms")
    d = spec.base
    # a lower factor with index == last only enters the vanishing term last+1
    _check_lower(spec.lower, d, last, "lower")
    t = CyclotomicProduct.one() if scale is None else scale
    z = spec.argument
    terms = [t]
    for k in range(last):
        # t_{k+1} / t_k
        step = CyclotomicProduct(z.sign, z.exponent)
        for u in spec.upper:
            step = step * u.factor(k, d)
        for b in spec.lower:
            step = step / b.factor(k, d)
        step = step / CyclotomicProduct.one_minus(d * (k + 1))
        t = t * step
        terms.append(t)
    return terms


def phi_eval(spec: PhiSeriesSpec, max_terms: int = DEFAULT_MAX_TERMS) -> RatFunc:
    return sum_products(phi_terms(spec, max_terms))


# ---------------------------------------------------------------------------
# the very-well-poised 8phi7 and its balanced 4phi3 image
# ---------------------------------------------------------------------------

def watson_sides(b, c, d, e, a, n: int, base: int):
    """``(lhs_spec, prefactor, rhs_spec)``; prefactor is ``None`` when it vanishes."""
    if a.sign != 1 or a.exponent % 2:
        raise ValueError("a must be an even power of q")
    Q = QMonomial.q(base)
    ra = QMonomial.q(a.exponent // 2)
    neg_ra = QMonomial(-1, ra.exponent)
    Qn = QMonomial.q(-n * base)
    aQ = a * Q
    lhs = PhiSeriesSpec(
        upper=(a, Q * ra, Q * neg_ra, b, c, d, e, Qn),
        lower=(ra, neg_ra, aQ / b, aQ / c, aQ / d, aQ / e, aQ * QMonomial.q(n * base)),
        base=base,
        argument=(a * a * QMonomial.q((n + 2) * base)) / (b * c * d * e),
    )
    rhs = PhiSeriesSpec(
        upper=(aQ / (b * c), d, e, Qn),
        lower=(aQ / b, aQ / c, (d * e) / (a * QMonomial.q(n * base))),
        base=base,
        argument=Q,
    )
    _check_lower(lhs.lower, base, n, "8phi7 lower")
    _check_lower(rhs.lower, base, n, "4phi3 lower")
    _check_lower((aQ / d, aQ / e), base, n, "prefactor denominator")
    num1, num2 = aQ.poch(base, n), (aQ / (d * e)).poch(base, n)
    if num1 is None or num2 is None:
        return lhs, None, rhs
    pre = num1 * num2 / ((aQ / d).poch(base, n) * (aQ / e).poch(base, n))
    return lhs, pre, rhs


def _timed(rep: Report, t0: float) -> Report:
    rep.timing_ms = round((time.perf_counter() - t0) * 1000)
    return rep


def _compare(rep: Report, left: RatFunc, right: RatFunc) -> None:
    if left == right:
        rep.status = Status.HOLDS
        rep.residue = "0"
    else:
        rep.status = Status.FAILS
        rep.residue = str((left - right).num)


def watson_check(b, c, d, e, a, n: int, base: int = 1, *,
                 max_terms: int = DEFAULT_MAX_TERMS) -> Report:
    """Evaluate both sides of the terminating 8phi7 -> 4phi3 transformation exactly."""
    t0 = time.perf_counter()
    params = {"n": n, "base": base, "a": a.exponent, "b": b.exponent,
              "c": c.exponent, "d": d.exponent, "e": e.exponent}
    signs = {k: v.sign for k, v in zip("bcde", (b, c, d, e)) if v.sign < 0}
    params.update({f"sign_{k}": s for k, s in signs.items()})
    rep = Report("watson", params, expected="0")
    try:
        lhs_spec, pre, rhs_spec = watson_sides(b, c, d, e, a, n, base)
        left = phi_eval(lhs_spec, max_terms)
        if pre is None:
            right = RatFunc(0)
        else:
            right = sum_products(phi_terms(rhs_spec, max_terms, scale=pre))
        _compare(rep, left, right)
        rep.actual = rep.residue
        rep.notes = f"8phi7 = {left.num.degree}/{left.den.degree}-degree rational function"
    except (DegenerateParameters, NonTerminating) as exc:
        rep.status = Status.ERROR
        rep.notes = f"{type(exc).__name__}: {exc}"
    except (QCongruenceError, ValueError) as exc:
        rep.status = Status.ERROR
        rep.notes = f"{type(exc).__name__}: {exc}"
    return _timed(rep, t0)


def t1_watson_instance(n: int, m: int):
    """Watson parameters ``(b, c, d, e, a, terms, base)`` whose 8phi7 side is
    the T1 sum over ``mn + (n+1)/2`` terms."""
    L = m * n + (n - 1) // 2
    q = QMonomial.q
    return q(2), q(1), q(2), q(4 + (4 * m + 2) * n), q(2), L, 4


def instance_2_3_equals_2_4(n: int, m: int) -> Report:
    """Check the T1 sum as an explicit 8phi7 and as prefactor times 4phi3.

    Both displayed series are written out here parameter by parameter,
    independently of :func:`watson_sides`, and compared with each other and
    with :func:`~.qseries.partial_sum`.
    """
    t0 = time.perf_counter()
    rep = Report("instance23", {"n": n, "m": m}, expected="0")
    if n % 4 != 3 or m < 0:
        raise ValueError("need n = 3 (mod 4) and m >= 0")
    L = m * n + (n - 1) // 2
    big = (4 * m + 2) * n
    q = QMonomial.q
    eight = PhiSeriesSpec(
        upper=(q(2), q(5), QMonomial(-1, 5), q(2), q(1), q(2), q(4 + big), q(2 - big)),
        lower=(q(1), QMonomial(-1, 1), q(4), q(5), q(4), q(2 - big), q(4 + big)),
        base=4, argument=q(1),
    )
    four = PhiSeriesSpec(
        upper=(q(3), q(2), q(4 + big), q(2 - big)),
        lower=(q(4), q(5), q(6)),
        base=4, argument=q(4),
    )
    pre = poch_product(6, 4, L) * poch_product(-big, 4, L) \
        / (poch_product(4, 4, L) * poch_product(2 - big, 4, L))
    try:
        left = phi_eval(eight)
        right = sum_products(phi_terms(four, scale=pre))
        direct = partial_sum("T1", L + 1)
        _compare(rep, left, right)
        notes = [f"{L + 1}-term 8phi7 vs prefactor * 4phi3"]
        if left != direct:
            rep.status = Status.FAILS
            rep.residue = str((left - direct).num)
            notes.append("8phi7 differs from the T1 partial sum")
        else:
            notes.append("8phi7 equals the T1 partial sum")
        rep.actual = rep.residue
        rep.notes = "; ".join(notes)
    except (DegenerateParameters, NonTerminating) as exc:
        rep.status = Status.ERROR
        rep.notes = f"{type(exc).__name__}: {exc}"
    return _timed(rep, t0)
