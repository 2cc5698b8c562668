"""Supercongruences for truncations of ``sum (1/2)_k^3 / k!^3``, and the product
``prod (4k-1)/(4k+1)``.

Sums are reduced modulo ``p^s`` along two routes: an exact rational sum
followed by a p-adic residue, and a running computation modulo ``p^s`` built on
``(1/2)_k / k! = C(2k, k) / 4^k``.  The modular route is the default; the
exact one serves as its oracle whenever it is cheap enough.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import QCongruenceError
from .rational import is_prime, padic_residue, padic_split, valuation
from .report import Level, Report, Status

__all__ = [
    "CLASSICAL_IDS",
    "ClassicalTask",
    "central_term",
    "conj1_product",
    "make_classical_task",
    "ratio_split",
    "rising",
    "run_classical",
    "sum_mod",
]

# the exact route is run next to the modular one up to this many terms
EXACT_LIMIT = 5000


def rising(a, k: int) -> Fraction:
    """``(a)_k = a (a+1) ... (a+k-1)``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    a = Fraction(a)
    out = Fraction(1)
    for j in range(k):
        out *= a + j
    return out


def central_term(k: int) -> Fraction:
    """``(1/2)_k^3 / k!^3``, checked against ``(C(2k, k) / 4^k)^3``."""
    t = rising(Fraction(1, 2), k) / math.factorial(k)
    assert t == Fraction(math.comb(2 * k, k), 4**k), k
    return t**3


def _exact_sum(N: int) -> Fraction:
    # sum_{k<N} C(2k,k)^3 / 64^k = S / 64^(N-1) with integer S
    S = 0
    c = 1
    for k in range(N):
        S = S * 64 + c**3
        c = c * 2 * (2 * k + 1) // (k + 1)
    return Fraction(S, 64 ** (N - 1))


def _modular_sum(N: int, p: int, s: int) -> int:
    mod = p**s
    inv64 = pow(64, -1, mod)
    # C(2k, k) = p^v * u, u a unit kept modulo p^s
    v, u = 0, 1
    total, w = 0, 1
    for k in range(N):
        if 3 * v < s:
            total = (total + pow(p, 3 * v, mod) * pow(u, 3, mod) * w) % mod
        w = w * inv64 % mod
        a, b = 2 * (2 * k + 1), k + 1
        va, vb = valuation(a, p), valuation(b, p)
        v += va - vb
        u = u * (a // p**va) * pow(b // p**vb, -1, mod) % mod
    return total


def sum_mod(N: int, p: int, s: int, path: str = "modular") -> int:
    """``sum_{k<N} central_term(k)`` as a residue modulo ``p**s``; ``p`` odd."""
    if N < 1 or s < 1:
        raise ValueError("N and s must be positive")
    if p < 3 or p % 2 == 0:
        raise ValueError(f"p must be an odd prime, got {p}")
    if path == "exact":
        return padic_residue(_exact_sum(N), p, s)
    if path == "modular":
        return _modular_sum(N, p, s)
    raise ValueError(f"unknown path {path!r}")


def ratio_split(p: int, M: int, s: int) -> tuple[int, int]:
    """``prod_{k=1}^{M} (4k-1)/(4k+1) = p^v * u``; returns ``(v, u mod p^s)``.

    Each factor is split before it touches the running unit, so nothing
    grows beyond ``p^s``.
    """
    mod = p**s
    v, u = 0, 1
    for k in range(1, M + 1):
        a, b = 4 * k - 1, 4 * k + 1
        va, vb = valuation(a, p), valuation(b, p)
        v += va - vb
        u = u * (a // p**va) % mod * pow(b // p**vb, -1, mod) % mod
    return v, u


def conj1_product(p: int, r: int) -> tuple[int, int]:
    """``(valuation, unit residue mod p^2)`` of the product up to ``(p^{2r}-1)/2``."""
    if p % 4 != 3:
        raise ValueError(f"p must be 3 mod 4, got {p}")
    if r < 0:
        raise ValueError("r must be nonnegative")
    return ratio_split(p, (p ** (2 * r) - 1) // 2, 2)


# ---------------------------------------------------------------------------
# tasks
# ---------------------------------------------------------------------------

# id -> (needs p = 3 mod 4, extra parameter name or None, level)
CLASSICAL_IDS = {
    "h2": (True, None, Level.THEOREM),
    "liu": (True, "m", Level.THEOREM),
    "swisher": (True, "r", Level.CONJECTURE),
    "cor_half": (True, None, Level.THEOREM),
    "cor_full": (True, None, Level.THEOREM),
    "cor_r_half": (True, "r", Level.THEOREM),
    "cor_r_full": (True, "r", Level.THEOREM),
    "conj1": (True, "r", Level.CONJECTURE),
}


def _statement(id_: str, p: int, x: int | None) -> tuple[int, int]:
    """``(number of terms, modulus exponent)`` of a statement."""
    if id_ == "h2":
        return (p + 1) // 2, 2
    if id_ == "liu":
        return x * p, 2
    if id_ == "swisher":
        return (p ** (2 * x) + 1) // 2, 2 * x + 3
    if id_ == "cor_half":
        return (p * p + 1) // 2, 4
    if id_ == "cor_full":
        return p * p, 4
    if id_ == "cor_r_half":
        return (p ** (2 * x) + 1) // 2, 2 * x + 2
    if id_ == "cor_r_full":
        return p ** (2 * x), 2 * x + 2
    if id_ == "conj1":
        return (p ** (2 * x) - 1) // 2, 2
    raise ValueError(f"unknown classical id {id_!r}")


@dataclass(frozen=True)
class ClassicalTask:
    id: str
    p: int
    extra: int | None = None
    modulus_exponent: int = 0
    assert_level: Level = Level.THEOREM
    params: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.id not in CLASSICAL_IDS:
            raise ValueError(f"unknown classical id {self.id!r}")
        need_mod4, extra_name, _ = CLASSICAL_IDS[self.id]
        if not is_prime(self.p) or self.p == 2:
            raise ValueError(f"p must be an odd prime, got {self.p}")
        if need_mod4 and self.p % 4 != 3:
            raise ValueError(f"{self.id} needs p = 3 (mod 4), got {self.p}")
        if self.id == "swisher" and self.p == 3:
            raise ValueError("swisher needs p > 3")
        if extra_name and (self.extra is None or self.extra < 1):
            raise ValueError(f"{self.id} needs a positive {extra_name}")
        _, s = _statement(self.id, self.p, self.extra)
        if self.modulus_exponent != s:
            raise ValueError(f"{self.id} works modulo p^{s}, not p^{self.modulus_exponent}")


def make_classical_task(id_: str, p: int, extra: int | None = None) -> ClassicalTask:
    if id_ not in CLASSICAL_IDS:
        raise ValueError(f"unknown classical id {id_!r}")
    _, extra_name, level = CLASSICAL_IDS[id_]
    extra = extra if extra_name else None
    s = _statement(id_, p, extra)[1] if extra_name is None or extra else 0
    params = {"id": id_, "p": p}
    if extra_name:
        params[extra_name] = extra
    return ClassicalTask(id_, p, extra, s, level, params)


def _run(task: ClassicalTask, rep: Report) -> None:
    p, x = task.p, task.extra
    N, s = _statement(task.id, p, x)
    mod = p**s
    if task.id == "conj1":
        v, u = conj1_product(p, x)
        rep.expected, rep.actual = "(0, 1)", f"({v}, {u})"
        verdict = "consistent with" if (v, u) == (0, 1) else "contradicts"
        rep.notes = f"product over {N} factors: valuation {v}, unit {u} mod {p}^2; {verdict} the prediction"
        rep.status = Status.REPORT
        return

    got = sum_mod(N, p, s, "modular")
    notes = [f"sum of {N} terms mod {p}^{s}"]
    if N <= EXACT_LIMIT:
        exact = sum_mod(N, p, s, "exact")
        if exact != got:
            rep.status = Status.ERROR
            rep.notes = f"modular path {got} != exact path {exact}"
            return
        notes.append("exact path agrees")

    if task.id in ("h2", "liu"):
        want = 0
    elif task.id == "swisher":
        want = pow(p, 2 * x, mod)
    else:
        r = 1 if task.id.startswith("cor_") and x is None else x
        v, u = ratio_split(p, (p ** (2 * r) - 1) // 2, s)
        if 2 * r + v < 0:
            raise QCongruenceError("right side is not p-integral")
        want = pow(p, 2 * r + v, mod) * u % mod
        notes.append(f"right side p^{2 * r + v} * unit")
    rep.expected, rep.actual = str(want), str(got)
    rep.residue = str((got - want) % mod)
    if task.assert_level is Level.THEOREM:
        rep.status = Status.HOLDS if got == want else Status.FAILS
    else:
        rep.status = Status.REPORT
        notes.append("matches the prediction" if got == want else "differs from the prediction")
    rep.notes = "; ".join(notes)


def run_classical(task: ClassicalTask) -> Report:
    t0 = time.perf_counter()
    rep = Report("classical", dict(task.params) or {"id": task.id, "p": task.p},
                 level=task.assert_level)
    try:
        _run(task, rep)
    except (QCongruenceError, ValueError, ZeroDivisionError) as exc:
        rep.status = Status.ERROR
        rep.notes = f"{type(exc).__name__}: {exc}"
    rep.timing_ms = round((time.perf_counter() - t0) * 1000)
    return rep
