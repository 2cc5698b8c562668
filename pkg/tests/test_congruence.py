from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, strategies as st

from qcongruence.congruence import (
    CongruenceTask,
    fn_least_index,
    proof_side_checks,
    reduce_mod,
    root_of_unity_oracle,
    verify,
)
from qcongruence.cyclotomic import build_modulus, cyclotomic
from qcongruence.errors import NotCoprime
from qcongruence.poly import Poly, poly_gcd
from qcongruence.qseries import RatFunc, qpoch, rhs_ratio, summand, summand_product
from qcongruence.report import Level, Status

x = sympy.Symbol("q")
MODULI = [build_modulus(f) for f in ([(3, 2)], [(5, 1)], [(3, 2), (9, 1)], [(7, 2)], [(4, 1), (6, 2)])]


def test_reduce_mod_inverse_of_one_plus_q():
    m = build_modulus([(3, 2)])
    g = reduce_mod(RatFunc(1, Poly([1, 1])), m)
    assert g.degree < 4
    assert (g * Poly([1, 1])) % m.expanded == Poly.one()
    want = sympy.invert(sympy.Poly(x + 1, x), sympy.Poly(m.expanded.coeffs[::-1], x))
    assert g == Poly([int(c) for c in reversed(sympy.Poly(want, x).all_coeffs())])


def test_reduce_mod_zero_and_not_coprime():
    m = build_modulus([(3, 1)])
    assert reduce_mod(RatFunc(0), m).is_zero()
    with pytest.raises(NotCoprime):
        reduce_mod(RatFunc(Poly([-1, 1]), Poly([1, 1, 1])), m)


polys = st.lists(st.integers(-9, 9), min_size=1, max_size=7)


@pytest.mark.criterion(9)
@given(polys, polys, polys, polys, st.sampled_from(MODULI))
def test_reduce_mod_is_linear(a, b, c, d, m):
    assume(any(b) and any(d))
    f, g = RatFunc(Poly(a), Poly(b)), RatFunc(Poly(c), Poly(d))
    mod = m.expanded
    assume(poly_gcd(f.den, mod).degree == 0 and poly_gcd(g.den, mod).degree == 0)
    assert reduce_mod(f + g, m) == (reduce_mod(f, m) + reduce_mod(g, m)) % mod


@given(polys, st.sampled_from(MODULI))
def test_reduce_mod_representative(a, m):
    f = RatFunc(Poly(a), Poly([2, 1]))
    r = reduce_mod(f, m)
    assert r.degree < m.degree
    # r * den - num is divisible by the modulus
    assert ((r * f.den - f.num) % m.expanded).is_zero()


def test_verify_examples():
    t = CongruenceTask("T1", 3, build_modulus([(3, 2)]), label="t1")
    r = verify(t)
    assert r.status is Status.HOLDS and r.residue == "0"
    t = CongruenceTask("T1", 5, build_modulus([(3, 2), (9, 2)]), rhs_ratio(4, 9), label="t2")
    assert verify(t).status is Status.HOLDS
    t = CongruenceTask("C2", 3, build_modulus([(3, 2)]), label="c2", level=Level.CONJECTURE)
    r = verify(t)
    assert r.status is Status.HOLDS and r.ok


def test_verify_detects_a_false_congruence():
    t = CongruenceTask("T1", 4, build_modulus([(3, 2)]), label="neg")
    r = verify(t)
    assert r.status is Status.FAILS and r.residue != "0"
    assert not r.ok
    # the residue is a genuine witness: sum - residue is divisible by the modulus
    from qcongruence.qseries import partial_sum
    s = partial_sum("T1", 4)
    res = Poly.parse(r.residue)
    assert ((res * s.den - s.num) % build_modulus([(3, 2)]).expanded).is_zero()
    assert not root_of_unity_oracle(s.num, 3).vanishes_twice


def test_conjecture_fail_does_not_fail_suite():
    t = CongruenceTask("C2", 4, build_modulus([(3, 2)]), label="c2", level=Level.CONJECTURE)
    r = verify(t)
    assert r.status is Status.FAILS and r.ok


def test_verify_reports_not_coprime_as_error():
    r = verify(CongruenceTask("T1", 3, build_modulus([(4, 1)]), label="bad"))
    assert r.status is Status.ERROR and "1 + 1*q^2" in r.notes and r.residue is None


def test_task_validation():
    with pytest.raises(ValueError):
        CongruenceTask("T1", 0, build_modulus([(3, 2)]))
    with pytest.raises(ValueError):
        CongruenceTask("T1", 2, build_modulus([(3, 2)]), label="")
    with pytest.raises(ValueError):
        CongruenceTask("T9", 2, build_modulus([(3, 2)]))


@pytest.mark.criterion(9)
@given(st.lists(st.integers(-50, 50), min_size=1, max_size=20).filter(any),
       st.sampled_from([3, 5, 7, 9, 15, 21]))
def test_oracle_sees_double_roots(c, n):
    p = Poly(c)
    assert root_of_unity_oracle(p * cyclotomic(n) ** 2, n).vanishes_twice
    single = p * cyclotomic(n)
    if not (p % cyclotomic(n)).is_zero():
        res = root_of_unity_oracle(single, n)
        assert res.value < 1e-9 and res.derivative > 1e-6


def test_oracle_on_huge_coefficients():
    p = Poly([3**400 * (-1) ** i + i for i in range(200)]) * cyclotomic(11) ** 2
    assert root_of_unity_oracle(p, 11).vanishes_twice


# -- factor counting -------------------------------------------------------

@pytest.mark.parametrize("n", [3, 7, 11, 19])
def test_least_index_table(n):
    assert fn_least_index(2, n) == (n + 1) // 2
    assert fn_least_index(3, n) == (n + 1) // 4
    assert fn_least_index(4, n) == n
    assert fn_least_index(5, n) == (3 * n - 1) // 4
    assert fn_least_index(6, n) == (n - 1) // 2


def test_least_index_examples():
    assert fn_least_index(2, 3) == 2
    assert fn_least_index(3, 3) == 1
    assert fn_least_index(4, 7) == 7
    with pytest.raises(ValueError):
        fn_least_index(2, 4)


@pytest.mark.parametrize("n", [3, 5, 7, 9, 11])
def test_least_index_by_polynomial_divisibility(n):
    phi = cyclotomic(n)
    for xx in range(-12, 13):
        k = 0
        while True:
            lp = qpoch(xx, 4, k)
            if lp.is_zero() or (lp.body % phi).is_zero():
                break
            k += 1
        assert fn_least_index(xx, n) == k, (xx, n)


@pytest.mark.parametrize("n,m", [(3, 1), (7, 1), (3, 2), (11, 3), (3, 0)])
def test_proof_side_checks(n, m):
    r = proof_side_checks(n, m)
    assert r.status is Status.HOLDS and r.actual == "2"


def test_proof_side_checks_rejects_bad_n():
    with pytest.raises(ValueError):
        proof_side_checks(5, 1)


@pytest.mark.criterion(9)
@pytest.mark.parametrize("n", [3, 7, 11])
@pytest.mark.parametrize("m", [0, 1, 2])
def test_summands_past_half_period_vanish_to_order_three(n, m):
    # the terms added when the range grows from mn + (n-1)/2 to (m+1)n - 1
    for k in range(m * n + (n + 1) // 2, (m + 1) * n):
        assert summand_product("T1", k).valuation(n) == 3
        if n <= 7:
            assert (summand("T1", k).num % cyclotomic(n) ** 3).is_zero()


@pytest.mark.criterion(9)
@pytest.mark.parametrize("n", [3, 7, 11])
@pytest.mark.parametrize("m", [1, 2])
def test_theorem_one_property(n, m):
    mod = build_modulus([(n, 2)])
    for N in (m * n, m * n + (n - 1) // 2 + 1):
        r = verify(CongruenceTask("T1", N, mod, label="t1"))
        assert r.status is Status.HOLDS and r.residue == "0"
