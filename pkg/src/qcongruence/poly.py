"""Dense univariate polynomials over Q in the variable ``q``.

A :class:`Poly` stores an integer coefficient vector together with one
positive common denominator, so ``Poly([1, Fraction(1, 2)])`` is held as
``(2, 1) / 2``.  Most of the heavy lifting in this package happens on
integer vectors, and the kernels below (multiplication, multiplication and
exact division by ``q**j - 1``, folding modulo ``q**d - 1``) work directly
on them.

Multiplication dispatches on operand length: schoolbook for short
operands, Karatsuba in the middle, and Kronecker substitution into one big
integer product for long ones.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import DivisionByZeroPoly, NotCoprime

try:  # GMP multiplication is asymptotically faster than CPython's Karatsuba
    import gmpy2

    _mpz = gmpy2.mpz
except ImportError:  # pragma: no cover
    gmpy2 = None
    _mpz = int

__all__ = [
    "Poly",
    "LaurentPoly",
    "KARATSUBA_THRESHOLD",
    "KRONECKER_THRESHOLD",
    "poly_arith",
    "poly_divrem",
    "poly_gcd",
    "poly_xgcd",
    "quotient_inverse",
    "poly_eval",
    "poly_eval_complex",
]

# Measured on CPython 3.10 + gmpy2: Kronecker packing beats Karatsuba from
# about 32 coefficients at every coefficient size tried, so with the defaults
# Karatsuba only runs when KRONECKER_THRESHOLD is raised above 64.
KARATSUBA_THRESHOLD = 64
KRONECKER_THRESHOLD = 32


# ---------------------------------------------------------------------------
# integer-vector kernels (lists of Python ints, no trailing-zero guarantee)
# ---------------------------------------------------------------------------

def _trim(c: list) -> list:
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    if n != len(c):
        del c[n:]
    return c


def _add(a: Sequence[int], b: Sequence[int]) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return out


def _sub(a: Sequence[int], b: Sequence[int]) -> list:
    out = list(a)
    if len(b) > len(out):
        out.extend([0] * (len(b) - len(out)))
    for i, x in enumerate(b):
        out[i] -= x
    return out


def _mul_schoolbook(a: Sequence[int], b: Sequence[int]) -> list:
    if not a or not b:
        return []
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for j, y in enumerate(b):
        if y:
            for i, x in enumerate(a):
                out[i + j] += x * y
    return out


def _mul_karatsuba(a: Sequence[int], b: Sequence[int], threshold: int) -> list:
    n = max(len(a), len(b))
    if min(len(a), len(b)) < threshold or n < 2 * threshold:
        return _mul_schoolbook(a, b)
    h = n // 2
    a0, a1 = list(a[:h]), list(a[h:])
    b0, b1 = list(b[:h]), list(b[h:])
    z0 = _mul_karatsuba(a0, b0, threshold)
    z2 = _mul_karatsuba(a1, b1, threshold)
    z1 = _mul_karatsuba(_add(a0, a1), _add(b0, b1), threshold)
    z1 = _sub(_sub(z1, z0), z2)
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(z0):
        out[i] += x
    for i, x in enumerate(z1):
        out[i + h] += x
    for i, x in enumerate(z2):
        out[i + 2 * h] += x
    return out


def _pack(c: Sequence[int], nbytes: int) -> int:
    """Evaluate ``c`` at ``2**(8*nbytes)``; coefficients may be negative."""
    pos = bytearray(len(c) * nbytes)
    neg = bytearray(len(c) * nbytes)
    any_neg = False
    for i, x in enumerate(c):
        if x > 0:
            pos[i * nbytes:(i + 1) * nbytes] = x.to_bytes(nbytes, "little")
        elif x < 0:
            any_neg = True
            neg[i * nbytes:(i + 1) * nbytes] = (-x).to_bytes(nbytes, "little")
    value = int.from_bytes(pos, "little")
    if any_neg:
        value -= int.from_bytes(neg, "little")
    return value


def _unpack(value: int, length: int, nbytes: int) -> list:
    # shift every slot by half its range so all digits become nonnegative
    half = 1 << (8 * nbytes - 1)
    offset = int.from_bytes(half.to_bytes(nbytes, "little") * length, "little")
    raw = (value + offset).to_bytes(length * nbytes, "little")
    return [int.from_bytes(raw[i * nbytes:(i + 1) * nbytes], "little") - half
            for i in range(length)]


def _mul_kronecker(a: Sequence[int], b: Sequence[int]) -> list:
    if not a or not b:
        return []
    ba = max(abs(x) for x in a).bit_length()
    bb = max(abs(x) for x in b).bit_length()
    bits = ba + bb + min(len(a), len(b)).bit_length() + 2
    nbytes = (bits + 7) // 8
    pa = _mpz(_pack(a, nbytes))
    pb = pa if a is b else _mpz(_pack(b, nbytes))
    return _unpack(int(pa * pb), len(a) + len(b) - 1, nbytes)


def _mul(a: Sequence[int], b: Sequence[int]) -> list:
    short = min(len(a), len(b))
    if short >= KRONECKER_THRESHOLD:
        return _mul_kronecker(a, b)
    if short >= KARATSUBA_THRESHOLD:
        return _mul_karatsuba(a, b, KARATSUBA_THRESHOLD)
    return _mul_schoolbook(a, b)


def _obj(c) -> np.ndarray:
    if isinstance(c, np.ndarray) and c.dtype == object:
        return c
    arr = np.empty(len(c), dtype=object)
    arr[:] = list(c)
    return arr


def mul_binomial(c: Sequence[int], j: int) -> np.ndarray:
    """``c * (q**j - 1)`` for ``j >= 1``, as an object array."""
    a = _obj(c)
    out = np.zeros(len(a) + j, dtype=object)
    out[j:] += a
    out[:len(a)] -= a
    return out


def div_binomial(c: Sequence[int], j: int) -> np.ndarray:
    """Exact quotient ``c / (q**j - 1)``; raises ``ArithmeticError`` if inexact."""
    c = _obj(c)
    n = len(c) - j
    if n <= 0:
        if any(c):
            raise ArithmeticError("binomial does not divide")
        return np.zeros(0, dtype=object)
    # c = b*(q^j - 1)  =>  b_i = b_{i-j} - c_i
    b = np.zeros(n + (-n) % j, dtype=object)
    b[:n] = -c[:n]
    b = b.reshape(-1, j).cumsum(axis=0).reshape(-1)[:n]
    tail = b[n - j:] if n >= j else np.concatenate(
        [np.zeros(j - n, dtype=object), b])
    if (tail != c[n:]).any():
        raise ArithmeticError("binomial does not divide")
    return b


def fold_binomial(c: Sequence[int], d: int) -> list:
    """Remainder of ``c`` modulo ``q**d - 1`` (length ``d``)."""
    n = len(c)
    arr = np.zeros(n + (-n) % d, dtype=object)
    arr[:n] = c
    if len(arr) == 0:
        return [0] * d
    return arr.reshape(-1, d).sum(axis=0).tolist()


def _rem_monic(c: Sequence[int], m: Sequence[int]) -> list:
    """Remainder of an integer vector by a monic integer vector."""
    dm = len(m) - 1
    if len(c) <= dm:
        return list(c)
    if dm == 0:
        return []
    a = _obj(c)
    mm = _obj(m[:dm])
    for i in range(len(a) - 1, dm - 1, -1):
        x = a[i]
        if x:
            a[i - dm:i] -= x * mm
    return a[:dm].tolist()


def _content(c: Sequence[int]) -> int:
    return math.gcd(*c) if c else 0


# ---------------------------------------------------------------------------
# Poly
# ---------------------------------------------------------------------------

class Poly:
    """Immutable polynomial with rational coefficients.

    ``Poly(coeffs)`` takes coefficients lowest degree first; ints,
    :class:`~fractions.Fraction` and decimal strings like ``"3/4"`` are
    accepted.  The zero polynomial has no coefficients and degree ``-1``.
    """

    __slots__ = ("_c", "_den", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        fr = [c if isinstance(c, (int, Fraction)) else Fraction(c) for c in coeffs]
        den = 1
        for x in fr:
            if isinstance(x, Fraction) and x.denominator != 1:
                den = den * x.denominator // math.gcd(den, x.denominator)
        ints = [int(x * den) if isinstance(x, Fraction) else x * den for x in fr]
        self._set(ints, den)

    def _set(self, ints: list, den: int) -> None:
        _trim(ints)
        if not ints:
            den = 1
        elif den != 1:
            g = math.gcd(_content(ints), den)
            if g != 1:
                ints = [x // g for x in ints]
                den //= g
        self._c = tuple(ints)
        self._den = den
        self._hash = None

    @classmethod
    def from_ints(cls, ints: Iterable[int], den: int = 1) -> "Poly":
        if den <= 0:
            raise ValueError("denominator must be positive")
        p = cls.__new__(cls)
        p._set(list(ints), den)
        return p

    @classmethod
    def monomial(cls, k: int, coeff=1) -> "Poly":
        return cls([0] * k + [coeff])

    @classmethod
    def one(cls) -> "Poly":
        return cls.from_ints([1])

    @classmethod
    def zero(cls) -> "Poly":
        return cls.from_ints([])

    # -- access ------------------------------------------------------------

    @property
    def coeffs(self) -> tuple:
        if self._den == 1:
            return tuple(Fraction(x) for x in self._c)
        return tuple(Fraction(x, self._den) for x in self._c)

    @property
    def int_coeffs(self) -> tuple:
        """Integer numerator vector; the coefficients are these over :attr:`den`."""
        return self._c

    @property
    def den(self) -> int:
        return self._den

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def is_integral(self) -> bool:
        return self._den == 1

    def __bool__(self) -> bool:
        return bool(self._c)

    def __len__(self) -> int:
        return len(self._c)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self._c):
            return Fraction(self._c[i], self._den)
        return Fraction(0)

    @property
    def lc(self) -> Fraction:
        if not self._c:
            return Fraction(0)
        return Fraction(self._c[-1], self._den)

    def monic(self) -> "Poly":
        if not self._c:
            return self
        lc = self._c[-1]
        if lc == 1 and self._den == 1:
            return self
        if all(x % lc == 0 for x in self._c):
            return Poly.from_ints([x // lc for x in self._c])
        sign = -1 if lc < 0 else 1
        return Poly.from_ints([sign * x for x in self._c], abs(lc))

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        return self._den == other._den and self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._c, self._den))
        return self._hash

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "Poly":
        if isinstance(x, Poly):
            return x
        if isinstance(x, (int, Fraction)):
            return Poly([x])
        return NotImplemented

    def __neg__(self) -> "Poly":
        return Poly.from_ints([-x for x in self._c], self._den)

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self._den == other._den:
            return Poly.from_ints(_add(self._c, other._c), self._den)
        d = self._den * other._den // math.gcd(self._den, other._den)
        fa, fb = d // self._den, d // other._den
        return Poly.from_ints(_add([x * fa for x in self._c],
                                   [x * fb for x in other._c]), d)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return Poly.from_ints([x * other.numerator for x in self._c],
                                  self._den * other.denominator)
        if not isinstance(other, Poly):
            return NotImplemented
        return Poly.from_ints(_mul(self._c, other._c), self._den * other._den)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, k: int) -> "Poly":
        """Multiply by ``q**k`` (``k >= 0``)."""
        if k < 0:
            raise ValueError("use LaurentPoly for negative shifts")
        if not self._c or k == 0:
            return self
        return Poly.from_ints([0] * k + list(self._c), self._den)

    def divrem(self, other: "Poly") -> tuple["Poly", "Poly"]:
        return poly_divrem(self, other)

    def __floordiv__(self, other) -> "Poly":
        return poly_divrem(self, self._coerce(other))[0]

    def __mod__(self, other) -> "Poly":
        other = self._coerce(other)
        if other._den == 1 and other._c and other._c[-1] == 1:
            return Poly.from_ints(_rem_monic(self._c, other._c), self._den)
        return poly_divrem(self, other)[1]

    def __divmod__(self, other):
        return poly_divrem(self, self._coerce(other))

    def derivative(self) -> "Poly":
        return Poly.from_ints([i * x for i, x in enumerate(self._c)][1:], self._den)

    def __call__(self, x):
        return poly_eval(self, x)

    def norm1(self) -> Fraction:
        return Fraction(sum(abs(x) for x in self._c), self._den)

    # -- text --------------------------------------------------------------

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for i, x in enumerate(self._c):
            if not x:
                continue
            c = Fraction(x, self._den)
            cs = str(c)
            if i == 0:
                terms.append(cs)
            elif i == 1:
                terms.append(f"{cs}*q")
            else:
                terms.append(f"{cs}*q^{i}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})" if len(self._c) <= 12 else \
            f"<Poly degree={self.degree}>"

    _TERM = re.compile(r"^\s*(-?\d+(?:/\d+)?)(?:\*q(?:\^(\d+))?)?\s*$")

    @classmethod
    def parse(cls, text: str) -> "Poly":
        """Inverse of ``str(poly)``."""
        text = text.strip()
        if text == "0":
            return cls.zero()
        coeffs: dict[int, Fraction] = {}
        for part in text.split(" + "):
            m = cls._TERM.match(part)
            if not m:
                raise ValueError(f"cannot parse term {part!r}")
            c = Fraction(m.group(1))
            if "*q" in part:
                k = int(m.group(2)) if m.group(2) else 1
            else:
                k = 0
            coeffs[k] = coeffs.get(k, Fraction(0)) + c
        top = max(coeffs)
        return cls([coeffs.get(i, 0) for i in range(top + 1)])


# ---------------------------------------------------------------------------
# functional API
# ---------------------------------------------------------------------------

def poly_arith(a: Poly, b: Poly, op: str) -> Poly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def poly_divrem(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Euclidean division ``a = quo*b + rem`` with ``deg rem < deg b``."""
    if b.is_zero():
        raise DivisionByZeroPoly("division by the zero polynomial")
    db = b.degree
    if a.degree < db:
        return Poly.zero(), a
    B = b.int_coeffs
    lc = B[-1]
    e = a.degree - db + 1
    # pseudo-division: lc**e * A = Q*B + R over the integers
    R = _obj(a.int_coeffs)
    Bv = _obj(B[:db])
    Q = np.zeros(e, dtype=object)
    for i in range(a.degree, db - 1, -1):
        x = R[i]
        if lc != 1:
            Q *= lc
            R[:i] *= lc
        Q[i - db] += x
        if x and db:
            R[i - db:i] -= x * Bv
        R[i] = 0
    scale = lc ** e if lc != 1 else 1
    sign = -1 if scale < 0 else 1
    # a = A/da, b = B/dbn  =>  quo = Q*dbn/(scale*da), rem = R/(scale*da)
    den = abs(scale) * a.den
    quo = Poly.from_ints([sign * x * b.den for x in Q.tolist()], den)
    rem = Poly.from_ints([sign * x for x in R[:db].tolist()], den) if db else Poly.zero()
    return quo, rem


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the remainder sequence (zero if both are zero)."""
    while not b.is_zero():
        a, b = b, poly_divrem(a, b)[1]
        b = b.monic()
    return a.monic()


def poly_xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Return ``(g, u, v)`` with ``u*a + v*b == g`` and ``g`` the monic gcd."""
    if a.is_zero() and b.is_zero():
        raise ValueError("xgcd of two zero polynomials")
    r0, r1 = a, b
    s0, s1 = Poly.one(), Poly.zero()
    t0, t1 = Poly.zero(), Poly.one()
    while not r1.is_zero():
        quo, rem = poly_divrem(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
        t0, t1 = t1, t0 - quo * t1
    inv = 1 / r0.lc
    return r0 * inv, s0 * inv, t0 * inv


def _inverse_mod_p(a: list, m: list, p: int) -> list | None:
    """Inverse of ``a`` modulo ``(m, p)`` by Euclid over GF(p); None if not a unit.

    ``p < 2**31`` so every product of residues fits in an int64.
    """
    def trim(x):
        nz = np.flatnonzero(x)
        return x[: nz[-1] + 1] if len(nz) else x[:0]

    r0 = trim(np.array([x % p for x in m], dtype=np.int64))
    r1 = trim(np.array([x % p for x in a], dtype=np.int64))
    s0, s1 = np.zeros(0, dtype=np.int64), np.ones(1, dtype=np.int64)
    while len(r1) > 1:
        # divide r0 by r1; the cofactor follows as s0 - quo*s1
        inv_lc = pow(int(r1[-1]), -1, p)
        dr = len(r1) - 1
        rem = r0.copy()
        quo = np.zeros(len(rem) - dr, dtype=np.int64)
        low = r1[:dr]
        for i in range(len(rem) - 1, dr - 1, -1):
            c = int(rem[i]) * inv_lc % p
            if c:
                quo[i - dr] = c
                rem[i - dr:i] = (rem[i - dr:i] - c * low) % p
            rem[i] = 0
        s_new = np.zeros(max(len(s0), len(quo) + len(s1) - 1), dtype=np.int64)
        s_new[:len(s0)] = s0
        for k in np.flatnonzero(quo).tolist():
            seg = s_new[k:k + len(s1)]
            s_new[k:k + len(s1)] = (seg - int(quo[k]) * s1) % p
        r0, r1, s0, s1 = r1, trim(rem), s1, trim(s_new)
    if not len(r1):
        return None
    inv_c = pow(int(r1[0]), -1, p)
    return (s1 * inv_c % p).tolist()


def _rational_reconstruct(u: int, mod: int) -> Fraction | None:
    bound = math.isqrt(mod // 2)
    r0, r1 = mod, u % mod
    t0, t1 = 0, 1
    while r1 > bound:
        qq = r0 // r1
        r0, r1 = r1, r0 - qq * r1
        t0, t1 = t1, t0 - qq * t1
    if t1 == 0 or abs(t1) > bound or math.gcd(r1, abs(t1)) != 1:
        return None
    return Fraction(r1, t1)


def _reconstruct_vector(residues: list[int], modulus: int) -> Poly | None:
    """Rational reconstruction of a whole vector with one shared denominator.

    Only entries that do not yet look like small integers after scaling by
    the running denominator need a (costly) reconstruction of their own.
    """
    half = modulus // 2
    bound = math.isqrt(half)
    den = 1
    for r in residues:
        v = (r * den + half) % modulus - half
        if abs(v) > bound:
            f = _rational_reconstruct(v, modulus)
            if f is None:
                return None
            den *= f.denominator
            if den > bound:
                return None
    nums = [(r * den + half) % modulus - half for r in residues]
    if any(abs(v) > bound for v in nums):
        return None
    return Poly.from_ints(nums, den)


def _multimodular_inverse(a: Poly, m: Poly, max_primes: int = 4096) -> Poly | None:
    """Inverse of ``a`` mod the integral ``m`` via CRT and rational reconstruction.

    Every candidate is certified by an exact product before it is returned;
    ``None`` means no certified inverse was found (likely not coprime).
    """
    A, M = list(a.int_coeffs), list(m.int_coeffs)
    p = 1 << 30
    residues: list[int] | None = None
    modulus = 1
    failures = 0
    used = 0
    check_at = 2
    while used < max_primes:
        p = int(gmpy2.next_prime(p)) if gmpy2 else _next_prime(p)
        if M[-1] % p == 0:
            continue
        b = _inverse_mod_p(A, M, p)
        if b is None:
            failures += 1
            if failures > 8 and residues is None:
                return None
            continue
        b += [0] * (m.degree - len(b))
        used += 1
        if residues is None:
            residues, modulus = b, p
        else:
            # CRT: x = r (mod modulus), x = b (mod p)
            inv = pow(modulus % p, -1, p)
            residues = [r + modulus * ((bi - r) * inv % p) for r, bi in zip(residues, b)]
            modulus *= p
        if used >= check_at:
            check_at = used * 2
            inv_a = _reconstruct_vector(residues, modulus)
            if inv_a is not None:
                inv_a = inv_a * a.den
                if ((a * inv_a) % m) == Poly.one():
                    return inv_a
    return None


def _next_prime(n: int) -> int:  # pragma: no cover - only without gmpy2
    n += 1
    while True:
        if n % 2 and all(pow(b, n - 1, n) == 1 for b in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)):
            return n
        n += 1


def quotient_inverse(a: Poly, m: Poly) -> Poly:
    """Inverse of ``a`` in ``Q[q]/(m)``.

    Tries a certified multi-modular inverse first; the rational extended
    Euclid is the fallback and supplies the gcd witness on failure.
    """
    if m.degree < 1:
        raise ValueError("modulus must have positive degree")
    a = a % m
    if a.is_zero():
        raise NotCoprime("zero is not invertible", witness=m.monic())
    if m.is_integral() and a.degree >= 1:
        inv = _multimodular_inverse(a, m)
        if inv is not None:
            return inv
    g, u, _ = poly_xgcd(a, m)
    if g.degree != 0:
        raise NotCoprime(f"gcd with modulus is {g}", witness=g)
    return u % m


def poly_eval(a: Poly, x) -> Fraction:
    x = Fraction(x)
    deg = a.degree
    if deg < 0:
        return Fraction(0)
    n, d = x.numerator, x.denominator
    # acc = sum c_i n^i d^(deg-i)
    acc = 0
    dp = 1
    for c in reversed(a.int_coeffs):
        acc = acc * n + c * dp
        dp *= d
    return Fraction(acc, a.den * d ** deg)


def poly_eval_complex(a: Poly, z: complex) -> complex:
    acc = 0j
    for c in reversed(a.int_coeffs):
        acc = acc * z + float(c)
    return acc / a.den


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------

class LaurentPoly:
    """``q**shift * body`` with ``body(0) != 0`` unless the value is zero."""

    __slots__ = ("body", "shift")

    def __init__(self, body: Poly, shift: int = 0):
        c = body.int_coeffs
        k = 0
        while k < len(c) and not c[k]:
            k += 1
        if k == len(c):
            self.body, self.shift = Poly.zero(), 0
        else:
            self.body = Poly.from_ints(c[k:], body.den) if k else body
            self.shift = shift + k

    @classmethod
    def from_poly(cls, p: Poly) -> "LaurentPoly":
        return cls(p, 0)

    def is_zero(self) -> bool:
        return self.body.is_zero()

    def to_poly(self) -> Poly:
        if self.shift < 0:
            raise ValueError("negative powers of q present")
        return self.body.shift(self.shift)

    def times_q(self, k: int) -> "LaurentPoly":
        return LaurentPoly(self.body, self.shift + k)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return LaurentPoly(self.body * other.body, self.shift + other.shift)
        if isinstance(other, Poly):
            return LaurentPoly(self.body * other, self.shift)
        if isinstance(other, (int, Fraction)):
            return LaurentPoly(self.body * other, self.shift)
        return NotImplemented

    __rmul__ = __mul__

    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, Poly):
            other = LaurentPoly(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        s = min(self.shift, other.shift)
        return LaurentPoly(self.body.shift(self.shift - s)
                           + other.body.shift(other.shift - s), s)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(-self.body, self.shift)

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-other)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            other = LaurentPoly(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.body == other.body and self.shift == other.shift

    def __hash__(self) -> int:
        return hash((self.body, self.shift))

    def __repr__(self) -> str:
        return f"LaurentPoly({self.body!r}, shift={self.shift})"
