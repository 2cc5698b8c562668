import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qcongruence.classical import (
    ClassicalTask,
    central_term,
    conj1_product,
    make_classical_task,
    ratio_split,
    rising,
    run_classical,
    sum_mod,
)
from qcongruence.qseries import q_limit_one, rhs_ratio
from qcongruence.rational import padic_residue, valuation
from qcongruence.report import Level, Status


def fraction_valuation(x: Fraction, p: int) -> int:
    return valuation(x.numerator, p) - valuation(x.denominator, p)


def test_rising_examples():
    assert rising(Fraction(1, 2), 2) == Fraction(3, 4)
    assert rising(Fraction(7, 3), 0) == 1
    assert rising(Fraction(3, 4), 4) == Fraction(3465, 256)
    with pytest.raises(ValueError):
        rising(1, -1)


def test_central_term_examples():
    assert central_term(0) == 1
    assert central_term(1) == Fraction(1, 8)
    assert central_term(2) == Fraction(27, 512)


def test_sum_mod_examples():
    assert sum_mod(2, 3, 2) == 0
    assert sum_mod(2, 3, 2, "exact") == 0
    for p in (3, 5, 7, 13):
        assert sum_mod(1, p, 3) == 1
    assert sum_mod(4, 7, 2) == 0
    with pytest.raises(ValueError):
        sum_mod(3, 2, 2)
    with pytest.raises(ValueError):
        sum_mod(3, 3, 2, "fast")


def test_conj1_product_examples():
    v, u = conj1_product(3, 1)
    assert Fraction(3 * 7 * 11 * 15, 5 * 9 * 13 * 17) == Fraction(77, 221)
    assert (v, u) == (0, 77 * pow(221, -1, 9) % 9)
    assert ratio_split(7, 0, 2) == (0, 1)
    assert conj1_product(3, 0) == (0, 1)
    assert conj1_product(7, 1)[0] == 0
    with pytest.raises(ValueError):
        conj1_product(5, 1)


@pytest.mark.criterion(9)
@given(st.integers(1, 200), st.sampled_from([3, 7, 11]), st.integers(1, 5))
def test_paths_agree(N, p, s):
    assert sum_mod(N, p, s, "modular") == sum_mod(N, p, s, "exact")


@pytest.mark.criterion(9)
def test_binomial_identity_up_to_500():
    for k in range(501):
        assert rising(Fraction(1, 2), k) / math.factorial(k) == Fraction(math.comb(2 * k, k), 4**k)
        central_term(k)


@pytest.mark.criterion(9)
@pytest.mark.parametrize("p", [3, 7, 11, 19])
def test_terms_past_half_vanish_to_order_three(p):
    for k in range((p - 1) // 2 + 1, p):
        assert fraction_valuation(central_term(k), p) >= 3


@pytest.mark.criterion(9)
@given(st.integers(0, 300), st.sampled_from([3, 5, 7, 11, 13]), st.integers(1, 4))
def test_ratio_split_matches_exact_product(M, p, s):
    x = Fraction(1)
    for k in range(1, M + 1):
        x *= Fraction(4 * k - 1, 4 * k + 1)
    v, u = ratio_split(p, M, s)
    assert v == fraction_valuation(x, p)
    assert u == padic_residue(x / Fraction(p) ** v, p, s)


@pytest.mark.criterion(9)
@pytest.mark.parametrize("p", [3, 7, 11])
def test_q_limit_matches_classical_right_side(p):
    M = (p * p - 1) // 2
    want = p * p * rising(Fraction(3, 4), M) / rising(Fraction(5, 4), M)
    prod = Fraction(1)
    for k in range(1, M + 1):
        prod *= Fraction(4 * k - 1, 4 * k + 1)
    assert want == p * p * prod
    assert q_limit_one(rhs_ratio(M, p * p)) == want


@pytest.mark.parametrize("id_,p,x", [("h2", 7, None), ("liu", 3, 2), ("cor_half", 3, None)])
def test_run_classical_examples(id_, p, x):
    rep = run_classical(make_classical_task(id_, p, x))
    assert rep.status is Status.HOLDS
    assert "exact path agrees" in rep.notes


def test_report_level_statements():
    rep = run_classical(make_classical_task("swisher", 7, 1))
    assert rep.status is Status.REPORT and rep.ok
    assert rep.expected == str(7**2)
    rep = run_classical(make_classical_task("conj1", 7, 1))
    assert rep.status is Status.REPORT and rep.ok
    assert rep.actual.startswith("(0, ")


def test_task_validation():
    with pytest.raises(ValueError):
        make_classical_task("h2", 5)
    with pytest.raises(ValueError):
        make_classical_task("h2", 9)
    with pytest.raises(ValueError):
        make_classical_task("liu", 7)
    with pytest.raises(ValueError):
        make_classical_task("swisher", 3, 1)
    with pytest.raises(ValueError):
        make_classical_task("nope", 7)
    with pytest.raises(ValueError):
        ClassicalTask("h2", 7, None, 3, Level.THEOREM)
    assert make_classical_task("cor_r_full", 3, 2).modulus_exponent == 6
