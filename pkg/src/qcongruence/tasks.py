"""Named task kinds: parameter validation, construction, and execution.

A task is a ``(kind, params)`` pair of plain data so it can cross process
boundaries; :func:`run_task` turns it into a :class:`~.report.Report`.
"""
from __future__ import annotations

import random
from typing import Any, Callable

from .classical import CLASSICAL_IDS, make_classical_task, run_classical
from .congruence import CongruenceTask, proof_side_checks, verify
from .cyclotomic import build_modulus
from .errors import DegenerateParameters
from .hypergeometric import QMonomial, watson_sides, instance_2_3_equals_2_4, t1_watson_instance, watson_check
from .qseries import Family, rhs_ratio
from .rational import is_prime
from .report import Level, Report

__all__ = ["KINDS", "TaskError", "paper_preset", "random_watson_params", "run_task", "validate"]


class TaskError(ValueError):
    """A task's parameters violate its preconditions."""


def _int(params: dict, name: str, lo: int | None = None) -> int:
    if name not in params:
        raise TaskError(f"missing parameter {name!r}")
    v = params[name]
    if isinstance(v, bool) or not isinstance(v, int):
        raise TaskError(f"parameter {name!r} must be an integer, got {v!r}")
    if lo is not None and v < lo:
        raise TaskError(f"parameter {name!r} must be >= {lo}, got {v}")
    return v


def _n3mod4(params: dict) -> int:
    n = _int(params, "n")
    if n < 3 or n % 4 != 3:
        raise TaskError(f"n must be 3 mod 4 and at least 3, got {n}")
    return n


def _odd_n(params: dict) -> int:
    n = _int(params, "n")
    if n < 3 or n % 2 == 0:
        raise TaskError(f"n must be odd and at least 3, got {n}")
    return n


def _variant(params: dict) -> int:
    v = _int(params, "variant")
    if v not in (1, 2):
        raise TaskError(f"variant must be 1 or 2, got {v}")
    return v


def _only(params: dict, *names: str) -> None:
    extra = set(params) - set(names)
    if extra:
        raise TaskError(f"unexpected parameters {sorted(extra)}")


# -- builders: each validates and returns a zero-argument runner -------------

def _theorem1(variant: str):
    def build(params):
        _only(params, "n", "m")
        n = _n3mod4(params)
        m = _int(params, "m", 0 if variant == "b" else 1)
        N = m * n if variant == "a" else m * n + (n - 1) // 2 + 1
        level = Level.INFORMATIONAL if m == 0 else Level.THEOREM
        task = CongruenceTask(Family.T1, N, build_modulus([(n, 2)]),
                              label=f"theorem1{variant}", level=level, params=params)
        return lambda: verify(task)
    return build


def _power_task(label: str, n: int, r: int, full: bool, params) -> CongruenceTask:
    P = n ** (2 * r)
    M = (P - 1) // 2
    factors = [(P, 2)] + [(n ** (2 * j - 1), 2) for j in range(1, r + 1)]
    return CongruenceTask(Family.T1, P if full else M + 1, build_modulus(factors),
                          rhs_ratio(M, P), label=label, params=params)


def _theorem2(variant: str):
    def build(params):
        _only(params, "n")
        n = _n3mod4(params)
        task = _power_task(f"theorem2{variant}", n, 1, variant == "b", params)
        return lambda: verify(task)
    return build


def _theorem3(variant: str):
    def build(params):
        _only(params, "n", "r")
        n = _n3mod4(params)
        r = _int(params, "r", 1)
        task = _power_task(f"theorem3{variant}", n, r, variant == "b", params)
        return lambda: verify(task)
    return build


def _guozu3(params):
    _only(params, "n", "variant")
    n = _odd_n(params)
    v = _variant(params)
    M = (n - 1) // 2
    task = CongruenceTask(Family.T1, M + 1 if v == 1 else n, build_modulus([(n, 2)]),
                          rhs_ratio(M, n), label="guozu3", params=params)
    return lambda: verify(task)


def _watson(params):
    if "terms" in params:
        _only(params, "terms", "base", "a", "b", "c", "d", "e",
              "sign_b", "sign_c", "sign_d", "sign_e")
        terms = _int(params, "terms", 0)
        base = _int(params, "base", 1)
        a = _int(params, "a")
        if a % 2:
            raise TaskError("a must be even")
        mons = []
        for k in "bcde":
            sign = params.get(f"sign_{k}", 1)
            if sign not in (1, -1):
                raise TaskError(f"sign_{k} must be 1 or -1")
            mons.append(QMonomial(sign, _int(params, k)))
        return lambda: watson_check(*mons, QMonomial.q(a), terms, base)
    _only(params, "n", "m")
    n = _n3mod4(params)
    m = _int(params, "m", 0)
    args = t1_watson_instance(n, m)

    def run():
        rep = watson_check(*args)
        rep.params = dict(params)
        return rep
    return run


def _instance23(params):
    _only(params, "n", "m")
    n = _n3mod4(params)
    m = _int(params, "m", 0)
    return lambda: instance_2_3_equals_2_4(n, m)


def _proofchecks(params):
    _only(params, "n", "m")
    n = _n3mod4(params)
    m = _int(params, "m", 0)
    return lambda: proof_side_checks(n, m)


def _conjecture1(params):
    _only(params, "p", "r")
    p = _int(params, "p")
    r = _int(params, "r", 1)
    if not is_prime(p) or p % 4 != 3:
        raise TaskError(f"p must be a prime = 3 mod 4, got {p}")
    task = make_classical_task("conj1", p, r)

    def run():
        rep = run_classical(task)
        rep.task, rep.params = "conjecture1", dict(params)
        return rep
    return run


def _conjecture2(params):
    _only(params, "n", "m", "variant")
    n = _n3mod4(params)
    m = _int(params, "m", 1)
    v = _variant(params)
    N = m * n if v == 1 else m * n + (n - 1) // 2 + 1
    task = CongruenceTask(Family.C2, N, build_modulus([(n, 2)]), label="conjecture2",
                          level=Level.CONJECTURE, params=params)
    return lambda: verify(task)


def _conjecture3(params):
    _only(params, "n", "variant")
    n = _n3mod4(params)
    v = _variant(params)
    P = n * n
    M = (P - 1) // 2
    task = CongruenceTask(Family.C2, M + 1 if v == 1 else P,
                          build_modulus([(n, 2), (P, 2)]),
                          rhs_ratio(M, P, qint_base=1, shift=0), label="conjecture3",
                          level=Level.CONJECTURE, params=params)
    return lambda: verify(task)


def _classical(params):
    id_ = params.get("id")
    if id_ not in CLASSICAL_IDS:
        raise TaskError(f"unknown classical id {id_!r}; choose from {sorted(CLASSICAL_IDS)}")
    extra_name = CLASSICAL_IDS[id_][1]
    _only(params, "id", "p", *([extra_name] if extra_name else []))
    p = _int(params, "p")
    extra = _int(params, extra_name, 1) if extra_name else None
    try:
        task = make_classical_task(id_, p, extra)
    except ValueError as exc:
        raise TaskError(str(exc)) from None
    return lambda: run_classical(task)


KINDS: dict[str, Callable[[dict], Callable[[], Report]]] = {
    "theorem1a": _theorem1("a"),
    "theorem1b": _theorem1("b"),
    "theorem2a": _theorem2("a"),
    "theorem2b": _theorem2("b"),
    "theorem3a": _theorem3("a"),
    "theorem3b": _theorem3("b"),
    "guozu3": _guozu3,
    "watson": _watson,
    "instance23": _instance23,
    "proofchecks": _proofchecks,
    "conjecture1": _conjecture1,
    "conjecture2": _conjecture2,
    "conjecture3": _conjecture3,
    "classical": _classical,
}


def validate(kind: str, params: dict[str, Any]) -> Callable[[], Report]:
    if kind not in KINDS:
        raise TaskError(f"unknown task kind {kind!r}")
    if not isinstance(params, dict):
        raise TaskError("task parameters must be a mapping")
    return KINDS[kind](dict(params))


def run_task(spec: tuple[str, dict]) -> Report:
    kind, params = spec
    return validate(kind, params)()


def random_watson_params(count: int, seed: int = 0) -> list[dict]:
    """``count`` non-degenerate parameter sets with small exponents, reproducibly."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        p = {"terms": rng.randint(0, 3), "base": rng.randint(1, 4), "a": 2 * rng.randint(-1, 3)}
        mons = []
        for k in "bcde":
            p[k] = rng.randint(-3, 6)
            sign = rng.choice((1, -1))
            if sign < 0:
                p[f"sign_{k}"] = -1
            mons.append(QMonomial(sign, p[k]))
        try:
            watson_sides(*mons, QMonomial.q(p["a"]), p["terms"], p["base"])
        except DegenerateParameters:
            continue
        out.append(p)
    return out


def paper_preset() -> list[tuple[str, dict]]:
    """Every check needed to cover the published statements at desk scale."""
    t: list[tuple[str, dict]] = []
    for v in "ab":
        t += [(f"theorem1{v}", {"n": n, "m": m}) for n in (3, 7, 11) for m in (1, 2)]
    for v in "ab":
        t += [(f"theorem2{v}", {"n": n}) for n in (3, 7, 11)]
    for v in "ab":
        t += [(f"theorem3{v}", {"n": n, "r": r}) for n, r in ((3, 1), (7, 1), (3, 2))]
    t += [("guozu3", {"n": n, "variant": v}) for n in (3, 5, 7, 9, 11, 15) for v in (1, 2)]
    t += [("watson", {"terms": 0, "base": 1, "a": 2, "b": 1, "c": 3, "d": -2, "e": 4})]
    t += [("watson", {"n": n, "m": m}) for n, m in ((3, 0), (3, 1), (7, 1))]
    t += [("watson", p) for p in random_watson_params(20)]
    t += [("instance23", {"n": n, "m": m}) for n in (3, 7) for m in (0, 1, 2)]
    t += [("proofchecks", {"n": n, "m": m}) for n in (3, 7, 11) for m in (1, 2, 3)]
    t += [("classical", {"id": "h2", "p": p}) for p in (3, 7, 11, 19, 23)]
    t += [("classical", {"id": "liu", "p": p, "m": m}) for p in (3, 7, 11) for m in (1, 2, 3)]
    t += [("classical", {"id": i, "p": p}) for i in ("cor_half", "cor_full") for p in (3, 7, 11)]
    t += [("classical", {"id": i, "p": p, "r": 2})
          for i in ("cor_r_half", "cor_r_full") for p in (3, 7)]
    t += [("conjecture1", {"p": p, "r": 1}) for p in (7, 11, 19)]
    t += [("conjecture1", {"p": 3, "r": 2})]
    t += [("classical", {"id": "swisher", "p": p, "r": 1}) for p in (7, 11)]
    t += [("conjecture2", {"n": n, "m": m, "variant": v})
          for n in (3, 7, 11) for m in (1, 2) for v in (1, 2)]
    t += [("conjecture3", {"n": n, "variant": v}) for n in (3, 7) for v in (1, 2)]
    return t
