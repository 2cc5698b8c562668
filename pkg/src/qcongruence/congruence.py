"""Reduction modulo products of cyclotomic polynomials and q-congruence checks.

A congruence ``lhs == rhs (mod m)`` between rational functions is decided by
reducing both sides into ``Q[q]/(m)``.  Left sides are partial sums of one of
the summand families; right sides are :class:`~.qseries.FactorRatio` values
or zero.  Every verdict can be cross-checked by a floating point oracle that
knows nothing about cyclotomic polynomials: it evaluates the
cleared-denominator difference and its derivative at a primitive root of
unity.
"""
from __future__ import annotations

import cmath
import math
import time
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .cyclotomic import CyclotomicProduct, PhiModulus, count_phi_factors
from .errors import NotCoprime, QCongruenceError
from .poly import Poly, quotient_inverse
from .qseries import Family, FactorRatio, RatFunc, partial_sum, poch_product
from .report import Level, Report, Status

__all__ = [
    "CongruenceTask",
    "OracleResult",
    "fn_least_index",
    "proof_side_checks",
    "reduce_mod",
    "root_of_unity_oracle",
    "verify",
]

ORACLE_TOLERANCE = 1e-6


def _modulus_poly(m) -> Poly:
    return m.expanded if isinstance(m, PhiModulus) else m


def _reduce_pair(num: Poly, den: Poly, mod: Poly) -> Poly:
    if num.is_zero():
        return Poly.zero()
    return (num % mod) * quotient_inverse(den, mod) % mod


def reduce_mod(f: RatFunc, m) -> Poly:
    """Representative of ``f`` in ``Q[q]/(m)`` of degree below ``deg m``.

    Raises :class:`NotCoprime` when the denominator shares a factor with the
    modulus; the gcd is attached as ``witness``.
    """
    if not isinstance(f, RatFunc):
        f = RatFunc(f)
    return _reduce_pair(f.num, f.den, _modulus_poly(m))


# ---------------------------------------------------------------------------
# floating point oracle
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OracleResult:
    n: int
    value: float        # |D(zeta)| / ||D||_1
    derivative: float   # |D'(zeta)| / ||D'||_1

    @property
    def vanishes_twice(self) -> bool:
        return self.value < ORACLE_TOLERANCE and self.derivative < ORACLE_TOLERANCE


def _eval_folded(c: np.ndarray, offset: int, n: int) -> float:
    """``|sum c_i zeta^(i - offset)| / sum |c_i|`` with ``zeta = exp(2 pi i / n)``."""
    norm = int(sum(abs(int(x)) for x in c))
    if norm == 0:
        return 0.0
    idx = (np.arange(len(c)) - offset) % n
    folded = [0] * n
    for i, x in zip(idx.tolist(), c.tolist()):
        if x:
            folded[i] += x
    z = cmath.exp(2j * math.pi / n)
    acc = 0j
    for j in range(n - 1, -1, -1):
        # true division keeps huge integers inside float range
        acc = acc * z + folded[j] / norm
    return abs(acc)


def root_of_unity_oracle(d: Poly, n: int) -> OracleResult:
    """Check numerically that ``d`` and ``d'`` vanish at ``exp(2 pi i / n)``.

    The exponents are folded modulo ``n`` exactly before any floating point
    work, so the result only carries rounding error of a length-``n`` sum.
    """
    c = np.array(d.int_coeffs, dtype=object)
    value = _eval_folded(c, 0, n)
    if len(c) > 1:
        dc = c[1:] * np.arange(1, len(c), dtype=object)
        deriv = _eval_folded(dc, 0, n)
    else:
        deriv = 0.0
    return OracleResult(n, value, deriv)


# ---------------------------------------------------------------------------
# tasks
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CongruenceTask:
    """``sum_{k<upper_n} summand(family, k) == rhs (mod modulus)``; no rhs means 0."""

    family: Family
    upper_n: int
    modulus: PhiModulus
    rhs: FactorRatio | None = None
    label: str = "congruence"
    level: Level = Level.THEOREM
    params: dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.upper_n < 1:
            raise ValueError(f"upper_n must be positive, got {self.upper_n}")
        if not self.label:
            raise ValueError("task label must be nonempty")
        object.__setattr__(self, "family", Family(self.family))


def _sides(task: CongruenceTask) -> tuple[Poly, Poly, Poly, Poly]:
    """``(a, b, c, d)`` with ``q^s * lhs = a/b`` and ``q^s * rhs = c/d``, all polynomials.

    ``s >= 0`` absorbs a negative monomial shift on the right; ``q`` is a
    unit modulo any ``Phi_n`` with ``n >= 2`` so this changes nothing.
    """
    s = partial_sum(task.family, task.upper_n)
    if task.rhs is None:
        return s.num, s.den, Poly.zero(), Poly.one()
    r = task.rhs.to_product()
    lift = max(0, -r.shift)
    r = r * CyclotomicProduct(1, lift)
    rf = RatFunc.from_product(r)
    return s.num.shift(lift), s.den, rf.num, rf.den


def verify(task: CongruenceTask, *, oracle: bool = True) -> Report:
    t0 = time.perf_counter()
    rep = Report(task.label, dict(task.params), level=task.level, expected="0")
    try:
        a, b, c, d = _sides(task)
        mod = task.modulus.expanded
        residue = (_reduce_pair(a, b, mod) - _reduce_pair(c, d, mod)) % mod
        rep.residue = rep.actual = str(residue)
        rep.status = Status.HOLDS if residue.is_zero() else Status.FAILS
        notes = [f"{task.family.value} sum of {task.upper_n} terms mod {task.modulus}"]
        if oracle and rep.status is Status.HOLDS:
            diff = a * d - c * b
            bad = [n for n, s in task.modulus.factors
                   if s >= 2 and not root_of_unity_oracle(diff, n).vanishes_twice]
            if bad:
                rep.status = Status.ERROR
                notes.append(f"root-of-unity oracle disagrees at n={bad}")
            else:
                notes.append("root-of-unity oracle agrees")
        rep.notes = "; ".join(notes)
    except NotCoprime as exc:
        rep.status = Status.ERROR
        rep.residue = None
        rep.notes = f"denominator not coprime to modulus, gcd {exc.witness}"
    except (QCongruenceError, MemoryError, RecursionError) as exc:
        rep.status = Status.ERROR
        rep.residue = None
        rep.notes = f"{type(exc).__name__}: {exc}"
    rep.timing_ms = round((time.perf_counter() - t0) * 1000)
    return rep


# ---------------------------------------------------------------------------
# factor counting behind the zero congruences
# ---------------------------------------------------------------------------

def fn_least_index(x: int, n: int) -> int:
    """Least ``k`` with ``Phi_n | (q^x; q^4)_k``, for odd ``n``.

    That is one past the least ``j >= 0`` with ``n | x + 4j``.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError(f"n must be a positive odd integer, got {n}")
    j0 = (-x * pow(4, -1, n)) % n if n > 1 else 0
    return j0 + 1


def _count_until(x: int, k: int, n: int) -> int:
    """Factors of ``(q^x; q^4)_k`` divisible by ``Phi_n``, from the threshold."""
    f = fn_least_index(x, n)
    return 0 if k < f else (k - f) // n + 1


def proof_side_checks(n: int, m: int) -> Report:
    """Phi_n bookkeeping behind the zero congruence over ``mn + (n+1)/2`` terms.

    Checks that the prefactor of the balanced 4phi3 form has ``Phi_n``
    multiplicity exactly 2, and that no reduced 4phi3 summand carries
    ``Phi_n`` in its denominator.  Each count is done twice: by arithmetic
    on exponents and on the factored products.
    """
    t0 = time.perf_counter()
    rep = Report("proofchecks", {"n": n, "m": m}, expected="2")
    if n % 4 != 3 or m < 0:
        raise ValueError("need n = 3 (mod 4) and m >= 0")
    L = m * n + (n - 1) // 2
    big = (4 * m + 2) * n
    mult = (count_phi_factors(6, 4, L, n) + count_phi_factors(-big, 4, L, n)
            - count_phi_factors(4, 4, L, n) - count_phi_factors(2 - big, 4, L, n))
    pre = poch_product(6, 4, L) * poch_product(-big, 4, L) \
        / (poch_product(4, 4, L) * poch_product(2 - big, 4, L))
    problems = []
    if pre.valuation(n) != mult:
        problems.append(f"factored multiplicity {pre.valuation(n)} != counted {mult}")

    ups, lows = (3, 2, 4 + big, 2 - big), (4, 4, 5, 6)
    tu = sorted(fn_least_index(x, n) for x in ups)
    tl = sorted(fn_least_index(x, n) for x in lows)
    if any(a > b for a, b in zip(tu, tl)):
        problems.append(f"thresholds {tu} not dominated by {tl}")
    for k in range(L + 1):
        counted = sum(_count_until(x, k, n) for x in ups) - sum(_count_until(x, k, n) for x in lows)
        t = CyclotomicProduct.one()
        for x in ups:
            t = t * poch_product(x, 4, k)
        for x in lows:
            t = t / poch_product(x, 4, k)
        if t.valuation(n) != counted or counted < 0:
            problems.append(f"summand {k}: Phi_{n} multiplicity {t.valuation(n)}")
            break

    rep.actual = str(mult)
    rep.residue = "0" if mult >= 2 else None
    if mult == 2 and not problems:
        rep.status = Status.HOLDS
        rep.notes = (f"prefactor has Phi_{n}^2 over {L} factors; thresholds {tu} <= {tl}; "
                     f"{L + 1} summand denominators coprime to Phi_{n}")
    else:
        rep.status = Status.FAILS
        rep.notes = "; ".join(problems) or f"prefactor multiplicity {mult}"
    rep.timing_ms = round((time.perf_counter() - t0) * 1000)
    return rep
